#pragma once

#include "superbott/types.hpp"
#include "superbott/partition.hpp"
#include "superbott/lr.hpp"
#include "superbott/character.hpp"
#include "superbott/bott.hpp"
#include "superbott/qseries.hpp"
#include "superbott/superschur.hpp"
#include "superbott/cohomology.hpp"
