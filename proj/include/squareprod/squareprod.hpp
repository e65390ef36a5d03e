#pragma once

#include "squareprod/commands.hpp"
#include "squareprod/exact_arith.hpp"
#include "squareprod/family_search.hpp"
#include "squareprod/pell.hpp"
#include "squareprod/poly_core.hpp"
#include "squareprod/product_square.hpp"
#include "squareprod/square_values.hpp"
