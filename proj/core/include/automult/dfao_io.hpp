#pragma once

#include <string>

#include "automult/dfao.hpp"

namespace automult {

// Text format, one JSON document: format tag, base, state name list,
// initial state, delta as nested map state -> digit -> state, output as map
// state -> value token ("int:n", "rat:p/q", "zeta:d,e").  Emission is
// canonical (fixed key order, fixed indentation), so equal automata
// serialize to identical bytes and load/save round trips bit-exactly.
std::string dfao_to_string(const Dfao& d);
Dfao dfao_from_string(const std::string& text);

Dfao load_dfao(const std::string& path);
void save_dfao(const Dfao& d, const std::string& path);

// FNV-1a 64-bit fingerprint of the canonical serialization, as 16 hex digits.
std::string dfao_hash(const Dfao& d);

std::uint64_t fnv1a64(const std::string& bytes);

}  // namespace automult
