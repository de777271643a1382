#pragma once

#include <gmpxx.h>

#include <istream>
#include <map>
#include <string>
#include <vector>

#include "ballotlab/report.hpp"

namespace ballotlab {

/// One parsed OEIS b-file: "index value" lines, '#' comments, indices
/// contiguous from the first line's index.
struct OeisBFile {
    std::string sequence_id;
    long first_index = 0;
    std::vector<mpz_class> values;
};

/// Throws std::runtime_error on malformed lines or an index gap.
OeisBFile parse_b_file(std::istream& in, std::string sequence_id);
OeisBFile load_b_file(const std::string& path, std::string sequence_id);

/// Sequence ids with a computable counterpart: A000246 (ballot counts,
/// offset 0), A008292 (Eulerian triangle by rows from n=1, offset 1),
/// A321280 (ballot descent triangle by rows from n=1, offset 1).
std::vector<std::string> known_oeis_sequences();

/// Compares the ingested b-file against artifact-computed values over the
/// file's whole range (A321280 rows above the enumeration limit cannot be
/// recomputed and cap the range). Throws std::runtime_error on an
/// unknown sequence id or an offset mismatch; value disagreement is a
/// fail report, not an error.
VerificationReport oeis_check(const OeisBFile& file);

}  // namespace ballotlab
