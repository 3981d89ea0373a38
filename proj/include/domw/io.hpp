#ifndef DOMW_IO_HPP
#define DOMW_IO_HPP

// Line-oriented ASCII formats. Blank lines and anything after '#' are ignored.
//
// Instances:
//   domw 1
//   kind <interval|tree-edges|split|subtree-intersection|explicit>
//   interval:             n, then n lines "id x y w"
//   tree-edges:           nv, then nv-1 lines "u v in_F w" (w omitted when in_F = 0)
//   split:                nv, then nv lines "id A|B w", then m, then m lines "u v"
//   subtree-intersection: host tree as tree-edges lines "u v 1 0", then k, then
//                         k lines "w size v1 .. vsize"
//   explicit:             nv, then nv lines "id w", then m, then m lines "u v"
//
// Certificates:
//   domw-cert 1
//   f <id> <value>      one per nonzero value, ascending id
//   I <id>...           dispersed set, ascending
//   value <n>
//
// Split results use the certificate layout with header "domw-split 1" and a
// "W <id>..." line listing the independent witness in place of "I".

#include <string>
#include <string_view>

#include "domw/graph.hpp"
#include "domw/instances.hpp"
#include "domw/split.hpp"

namespace domw {

/// Throws SyntaxError(line, reason) or SemanticError.
InstanceFile parse_instance(std::string_view text);
std::string write_instance(const InstanceFile& inst);

std::string write_certificate(const Certificate& cert);
/// The file lists only nonzero values, so the caller supplies the vertex count.
Certificate parse_certificate(std::string_view text, std::size_t vertex_count);

std::string write_split_result(const SplitResult& result);

}  // namespace domw

#endif  // DOMW_IO_HPP
