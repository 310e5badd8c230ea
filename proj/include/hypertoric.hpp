#pragma once

#include "hypertoric/arrangement.hpp"
#include "hypertoric/errors.hpp"
#include "hypertoric/exactlin.hpp"
#include "hypertoric/groebner.hpp"
#include "hypertoric/oracle.hpp"
#include "hypertoric/polynomial.hpp"
#include "hypertoric/presentation.hpp"
#include "hypertoric/stabilizers.hpp"
