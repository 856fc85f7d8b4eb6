#pragma once

#include "recap/errors.hpp"
#include "recap/exactnum.hpp"
#include "recap/poly.hpp"
#include "recap/roots.hpp"
#include "recap/factor.hpp"
#include "recap/resultant.hpp"
#include "recap/trinomial.hpp"
#include "recap/recurrence.hpp"
#include "recap/ap_engine.hpp"
#include "recap/json_io.hpp"
#include "recap/catalog.hpp"
