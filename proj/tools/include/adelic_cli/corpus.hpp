#pragma once

#include <adelic/number_field.hpp>

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace adelic::cli {

struct CorpusField {
  std::string poly;
  std::string label;
  std::int64_t least_split_prime;  // least good prime splitting completely

  NumberField field() const;
};

// The reference fields of degrees 1 to 8 used by the golden suite and the
// acceptance tests.
const std::vector<CorpusField>& corpus();

// Prints one PASS/FAIL line per golden check and a summary; true when all pass.
bool run_golden_suite(std::ostream& out);

}  // namespace adelic::cli
