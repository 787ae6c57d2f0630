#pragma once

#include "g2/families/common.hpp"
#include "g2/families/degree3.hpp"
#include "g2/families/degree5.hpp"
#include "g2/families/degree7.hpp"
