#pragma once

#include <iosfwd>
#include <string>

#include "core/network.hpp"

namespace beliefnet {

// Line-oriented network text format:
//
//   N <vertex-count> H <tolerance>
//   V <id> <f> <g> <h> <ordinal>     (one per vertex, id-sorted on output)
//   E <u> <v> <sign>                 (one per edge, sign in {-1,0,1})
//
// Loading is strict: counts must match, edges must reference declared
// vertices, and duplicate pairs (in either order), self-loops or malformed
// fields raise ParseError with the offending line number.
void save_network(const SignedNetwork& net, std::ostream& out);
std::string dump_network(const SignedNetwork& net);
void save_network_file(const SignedNetwork& net, const std::string& path);

SignedNetwork load_network(std::istream& in);
SignedNetwork load_network_string(const std::string& text);
SignedNetwork load_network_file(const std::string& path);

}  // namespace beliefnet
