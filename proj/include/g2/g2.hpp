#pragma once

#include "g2/elliptic.hpp"
#include "g2/exact.hpp"
#include "g2/families.hpp"
#include "g2/genus2.hpp"
#include "g2/ramification.hpp"
