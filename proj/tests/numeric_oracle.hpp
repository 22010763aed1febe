#pragma once

#include "girr/numeric_oracle.hpp"

namespace testing_oracle = girr::reference;
