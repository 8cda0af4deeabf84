#pragma once

// Umbrella header: the whole library in one include.

#include "ctxcalc/ast.hpp"
#include "ctxcalc/calculus.hpp"
#include "ctxcalc/checker.hpp"
#include "ctxcalc/context.hpp"
#include "ctxcalc/diagnostics.hpp"
#include "ctxcalc/env.hpp"
#include "ctxcalc/eval.hpp"
#include "ctxcalc/lexer.hpp"
#include "ctxcalc/parser.hpp"
#include "ctxcalc/render.hpp"
#include "ctxcalc/tag.hpp"
#include "ctxcalc/tag_set.hpp"
#include "ctxcalc/token.hpp"
