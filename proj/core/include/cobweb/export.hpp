#pragma once

// Text renderings shared by the CLI and the tests. Big integers are always
// written as plain decimal strings; JSON documents carry "schema": 1.

#include <string>

#include "cobweb/chain_interpretation.hpp"
#include "cobweb/cobweb_poset.hpp"
#include "cobweb/matrix.hpp"

namespace cobweb {

inline constexpr int kSchemaVersion = 1;

// Space-separated rows, one line per row.
std::string to_dense(const IntMatrix& m);
// Comma-separated rows, one line per row.
std::string to_csv(const IntMatrix& m);
// {"schema":1,"size":N,"rows":[["1","0"],...]} for square matrices,
// {"schema":1,"rows_count":R,"cols_count":C,"rows":[...]} otherwise.
std::string to_json(const IntMatrix& m);
// Inverse of to_json. Accepts entries as decimal strings or JSON integers.
IntMatrix matrix_from_json(const std::string& text);

// {"schema":1,"max_level":L,"vertices":N,"edges":[[i,j],...]}
std::string to_json(const CobwebTruncation& t);

// {"schema":1,"n":..,"k":..,"per_source":"..","total":"..","fibonomial":".."}
std::string to_json(const ChainCountReport& r);

}  // namespace cobweb
