#pragma once

// Umbrella header for the symbol-calculus engine.

#include "lusym/sign.hpp"
#include "lusym/partition.hpp"
#include "lusym/symbol.hpp"
#include "lusym/rep.hpp"
#include "lusym/theta.hpp"
#include "lusym/ggp.hpp"
#include "lusym/io.hpp"
#include "lusym/verify.hpp"
