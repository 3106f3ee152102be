#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "nls/dispersion.hpp"
#include "nls/experiments.hpp"
#include "nls/stepper.hpp"

namespace nls::csv {

/// Shortest round-trip decimal form ("%.17g" trimmed); NaN prints as "nan".
std::string format_double(double v);

// All writers emit a header row and LF line endings; numeric formatting is
// deterministic so identical inputs give byte-identical files.

void write_solve(std::ostream& os, const std::vector<StepRecord>& records);
void write_converge(std::ostream& os, const std::vector<ConvergenceRow>& rows);
void write_dispersion(std::ostream& os, const std::vector<DispersionRow>& rows);
void write_blowup(std::ostream& os, const std::vector<BlowupReport>& reports);

}  // namespace nls::csv
