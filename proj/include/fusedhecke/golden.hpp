#pragma once

#include <iosfwd>

namespace fh {

// Runs the fixture suite of worked examples and published values; prints
// one PASS/FAIL line per fixture and returns the number of failures.
int run_golden(std::ostream& os);

} // namespace fh
