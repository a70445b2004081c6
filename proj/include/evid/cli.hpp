#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "evid/evidence.hpp"

namespace evid::cli {

// One focal-set assignment as it appears in an evidence file.
struct MassEntry {
  std::vector<std::string> set;
  double mass = 0.0;
};

// In-memory form of an evidence file: a frame plus focal-set masses.
struct EvidenceDocument {
  std::vector<std::string> frame;
  std::vector<MassEntry> masses;
};

// Parse the JSON evidence format. Mass values may be numbers, decimal
// strings, or exact fractions like "5/7".
EvidenceDocument parse_document(const std::string& text);
EvidenceDocument load_document(const std::string& path);

MassFunction to_mass(const EvidenceDocument& doc);
EvidenceDocument document_from(const MassFunction& m);

// Number formatting used for all CLI output: 12 significant digits.
std::string format_value(double v);

// Entry point behind main(); takes argv[1:] in order. Returns the process
// exit code: 0 success, 1 domain error, 2 usage error.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace evid::cli
