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
  \file cli.hpp
  \brief Command-line front end

  Commands: parse, graph, stg, attractors, synthesize, verify.  Exit codes:
  0 success / verified, 1 not verified, 2 input error, 3 cap exceeded.
*/

#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace bnpin
{

enum exit_code : int
{
  exit_ok = 0,
  exit_not_verified = 1,
  exit_input_error = 2,
  exit_cap_exceeded = 3
};

/*! \brief Runs one command; `args` excludes the program name. */
int run( const std::vector<std::string>& args, std::ostream& out, std::ostream& err );

} // namespace bnpin
