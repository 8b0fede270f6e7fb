#pragma once

#include "shiftbox/chessboard.hpp"
#include "shiftbox/coset_table.hpp"
#include "shiftbox/errors.hpp"
#include "shiftbox/nielsen.hpp"
#include "shiftbox/oracle.hpp"
#include "shiftbox/presentation.hpp"
#include "shiftbox/primitives.hpp"
#include "shiftbox/shifting_boxes.hpp"
#include "shiftbox/transversal.hpp"
#include "shiftbox/word.hpp"
