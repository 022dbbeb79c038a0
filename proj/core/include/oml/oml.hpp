#pragma once

#include "oml/algorithms.hpp"
#include "oml/bitset.hpp"
#include "oml/constructions.hpp"
#include "oml/errors.hpp"
#include "oml/finite_oml.hpp"
#include "oml/format.hpp"
#include "oml/isomorphism.hpp"
#include "oml/lp.hpp"
#include "oml/rays.hpp"
#include "oml/states.hpp"
