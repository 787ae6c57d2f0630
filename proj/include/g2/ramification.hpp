#pragma once

#include "g2/ramification/cover.hpp"
#include "g2/ramification/enumerate.hpp"
#include "g2/ramification/profile.hpp"
#include "g2/ramification/templates.hpp"
