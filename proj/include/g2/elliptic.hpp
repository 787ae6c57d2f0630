#pragma once

#include "g2/elliptic/j_invariant.hpp"
