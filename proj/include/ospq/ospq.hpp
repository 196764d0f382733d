#pragma once

#include "ospq/adjoint.hpp"
#include "ospq/algebra.hpp"
#include "ospq/center.hpp"
#include "ospq/element.hpp"
#include "ospq/errors.hpp"
#include "ospq/hopf.hpp"
#include "ospq/linalg.hpp"
#include "ospq/parser.hpp"
#include "ospq/report.hpp"
#include "ospq/scalar.hpp"
#include "ospq/serre.hpp"
#include "ospq/suites.hpp"
#include "ospq/tensor.hpp"
#include "ospq/torus.hpp"
#include "ospq/verma.hpp"
#include "ospq/weights.hpp"
#include "ospq/zhang.hpp"
