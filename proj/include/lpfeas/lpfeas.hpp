/**
 * lpfeas.hpp
 *
 * Umbrella header for the whole library.
 */
#pragma once

#include "lpfeas/asm_solver.hpp"
#include "lpfeas/asmd_solver.hpp"
#include "lpfeas/cli.hpp"
#include "lpfeas/dictionary.hpp"
#include "lpfeas/label.hpp"
#include "lpfeas/linear_program.hpp"
#include "lpfeas/lp_parse.hpp"
#include "lpfeas/oracle.hpp"
#include "lpfeas/random_lp.hpp"
#include "lpfeas/rational.hpp"
#include "lpfeas/trace.hpp"
#include "lpfeas/trace_render.hpp"
