#pragma once

#include "girr/reference_groups.hpp"

namespace testing_groups = girr::reference;
