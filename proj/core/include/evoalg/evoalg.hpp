#pragma once

#include "evoalg/algebra.hpp"
#include "evoalg/autos.hpp"
#include "evoalg/deriv.hpp"
#include "evoalg/diag.hpp"
#include "evoalg/error.hpp"
#include "evoalg/graph.hpp"
#include "evoalg/matrix.hpp"
#include "evoalg/monomial.hpp"
#include "evoalg/rings.hpp"
#include "evoalg/scalar.hpp"
