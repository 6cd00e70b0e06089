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
  \file report.hpp
  \brief JSON and DOT exports with stable field names

  Objects keep their fields in insertion order so that identical runs produce
  byte-identical output.
*/

#pragma once

#include <string>

#include <json.hpp>

#include "dynamics.hpp"
#include "feedback_arc_set.hpp"
#include "network.hpp"
#include "synthesis.hpp"

namespace bnpin
{

using json = nlohmann::ordered_json;

/*! \brief {bits, gamma}; gamma is null when n > 63. */
json state_to_json( const state_index& state );

/*! \brief n, K and the in-neighbors of every node. */
json network_summary( const boolean_network& net );

json to_json( const verification_report& report );

json to_json( const attractor_report& report, const boolean_network& net );

json to_json( const pinning_plan& plan, const boolean_network& net );

/*! \brief Plan plus the controlled network and the verification outcome. */
json to_json( const synthesis_result& result );

/*! \brief Graphviz rendering of the interaction digraph. */
std::string to_dot( const interaction_digraph& g, const boolean_network& net );

} // namespace bnpin
