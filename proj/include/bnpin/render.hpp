/* bnpin: pinning control synthesis for Boolean networks
 * Copyright (C) 2026  bnpin contributors
 *
 * Permission is hereby granted, free of charge, to any person
 * obtaining a copy of this software and associated documentation
 * files (the "Software"), to deal in the Software without
 * restriction, including without limitation the rights to use,
 * copy, modify, merge, publish, distribute, sublicense, and/or sell
 * copies of the Software, and to permit persons to whom the
 * Software is furnished to do so, subject to the following
 * conditions:
 *
 * The above copyright notice and this permission notice shall be
 * included in all copies or substantial portions of the Software.
 *
 * THE SOFTWARE IS PROVIDED "AS IS", WITHOUT WARRANTY OF ANY KIND,
 * EXPRESS OR IMPLIED, INCLUDING BUT NOT LIMITED TO THE WARRANTIES
 * OF MERCHANTABILITY, FITNESS FOR A PARTICULAR PURPOSE AND
 * NONINFRINGEMENT. IN NO EVENT SHALL THE AUTHORS OR COPYRIGHT
 * HOLDERS BE LIABLE FOR ANY CLAIM, DAMAGES OR OTHER LIABILITY,
 * WHETHER IN AN ACTION OF CONTRACT, TORT OR OTHERWISE, ARISING
 * FROM, OUT OF OR IN CONNECTION WITH THE SOFTWARE OR THE USE OR
 * OTHER DEALINGS IN THE SOFTWARE.
 */

/*!
  \file render.hpp
  \brief Rendering truth tables as rule-grammar formulas
*/

#pragma once

#include <string>
#include <vector>

#include "truth_table.hpp"

namespace bnpin
{

/*! \brief Largest arity rendered as a minimized sum of products. */
inline constexpr uint32_t max_sop_arity = 10u;

/*! \brief Formula over `names` whose truth table equals `table`.
 *
 * Arities up to `max_sop_arity` yield a two-level (Quine-McCluskey) sum of
 * products; larger ones a Shannon expansion.  Names are inserted verbatim.
 */
std::string render_expression( const truth_table& table, const std::vector<std::string>& names );

} // namespace bnpin
