#pragma once

#include "genfrob/checked.hpp"
#include "genfrob/lattice.hpp"
#include "genfrob/counting.hpp"
#include "genfrob/ideal.hpp"
#include "genfrob/neighbourhood.hpp"
#include "genfrob/frobenius.hpp"
#include "genfrob/module.hpp"
#include "genfrob/poset.hpp"
