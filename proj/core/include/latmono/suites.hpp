#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "latmono/certificate.hpp"

namespace latmono {

/// del_pezzo, gosset, weyl, lattices, k3_glue, gaussian (in this order).
const std::vector<std::string>& suite_names();

/// A suite name or "all".
bool is_known_suite(std::string_view name);

/// Checks run sequentially in declaration order. Throws
/// std::invalid_argument for an unknown name.
SuiteCertificate run_suite(std::string_view name);

/// One suite, or every suite for "all".
Certificate run_suites(std::string_view name);

/// gosset, schlafli, h-minus, k3-gram.
const std::vector<std::string>& export_names();

/// Text for an exportable object: adjacency lists for graphs, `a+bi` rows
/// for the hermitian Gram, integer rows for the K3 Gram. Throws
/// std::invalid_argument for an unknown name.
std::string export_object(std::string_view name);

}  // namespace latmono
