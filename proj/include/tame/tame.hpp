#pragma once

#include <tame/autos.hpp>
#include <tame/decision.hpp>
#include <tame/error.hpp>
#include <tame/linsolve.hpp>
#include <tame/numsemi.hpp>
#include <tame/parser.hpp>
#include <tame/poisson.hpp>
#include <tame/polynomial.hpp>
#include <tame/rational.hpp>
#include <tame/reduction.hpp>
#include <tame/verify.hpp>
