#pragma once

#include "adnil/errors.hpp"
#include "adnil/golden.hpp"
#include "adnil/ideals.hpp"
#include "adnil/poset.hpp"
#include "adnil/render.hpp"
#include "adnil/root_set.hpp"
#include "adnil/root_system.hpp"
#include "adnil/tabulate.hpp"
