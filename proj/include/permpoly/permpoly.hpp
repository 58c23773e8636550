#pragma once

// Umbrella header.

#include "permpoly/counting.hpp"
#include "permpoly/error.hpp"
#include "permpoly/field.hpp"
#include "permpoly/groups.hpp"
#include "permpoly/io.hpp"
#include "permpoly/latin.hpp"
#include "permpoly/perm.hpp"
#include "permpoly/poly.hpp"
