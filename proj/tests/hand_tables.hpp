#pragma once

#include "girr/hand_tables.hpp"

namespace testing_tables = girr::reference;
