#pragma once

#include "g2/genus2/binary_form.hpp"
#include "g2/genus2/igusa.hpp"
