#pragma once

#include <string>
#include <vector>

#include "gli/goeritz.hpp"

namespace gli {

// One row of tabulated output: everything the command line reports about a
// single diagram. `triples` holds the (xi, xi*) pair when the diagram is
// colorable and is empty otherwise. When the input could not be processed at
// all, `error` is set and the remaining fields are meaningless.
struct InvariantRecord {
    std::string name;
    std::string gauss_code;  // canonical serialization
    int genus = 0;
    bool colorable = false;
    std::vector<InvariantTriple> triples;
    std::string certificate;
    std::string error;

    bool ok() const { return error.empty(); }
};

// Runs the full pipeline on one Gauss code. Parse and structure problems are
// captured in `error` rather than thrown so batch runs can keep going. A
// split diagram is reported as not colorable (it has no single checkerboard
// surface to speak of).
InvariantRecord compute_record(const std::string& name, const std::string& gauss_text);

// Schema-stable JSON: {name, gauss_code, genus, colorable,
// invariants:[{sigma,det,nullity,mu}], certificate}; a failed record gives
// {name, error} instead. records_json wraps a list of records in an array.
// Output is a pure function of the records (no timestamps).
std::string record_json(const InvariantRecord& rec);
std::string records_json(const std::vector<InvariantRecord>& recs);

// CSV with a fixed header row; the two triples are flattened into columns,
// left empty for uncolorable or failed records.
std::string records_csv(const std::vector<InvariantRecord>& recs);

}  // namespace gli
