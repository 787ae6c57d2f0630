#pragma once

#include "g2/errors.hpp"
#include "g2/exact/bivariate.hpp"
#include "g2/exact/number_field.hpp"
#include "g2/exact/polynomial.hpp"
#include "g2/exact/quadratic.hpp"
#include "g2/exact/rational.hpp"
#include "g2/exact/real_roots.hpp"
#include "g2/exact/resultant.hpp"
#include "g2/exact/sparse.hpp"
#include "g2/exact/squarefree.hpp"
