// Places where the printed formulas disagree with an oracle, each with a
// check that is rerun whenever the ledger is produced.

#ifndef KINKZETA_VERIFY_ERRATA_HPP
#define KINKZETA_VERIFY_ERRATA_HPP

#include <string>
#include <vector>

namespace kinkzeta::verify {

struct ErratumEntry {
  std::string tag;          // equation label or section
  std::string printed;
  std::string implemented;
  std::string oracle;
  double printed_error = 0;      // oracle discrepancy of the printed form
  double implemented_error = 0;  // oracle discrepancy of the implemented form
  bool passed = false;           // implemented agrees and printed does not
};

std::vector<ErratumEntry> errata_ledger();

}  // namespace kinkzeta::verify

#endif  // KINKZETA_VERIFY_ERRATA_HPP
