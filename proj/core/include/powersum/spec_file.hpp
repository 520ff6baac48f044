#ifndef POWERSUM_SPEC_FILE_HPP
#define POWERSUM_SPEC_FILE_HPP

#include "powersum/poly.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace powersum {

// One a * alpha^n summand of a power-sum form.
struct PowerSumTerm {
    Poly a;
    Poly alpha;
};

// Linear recurrence of order d:
//   W_{n+d} = coeffs[0] W_{n+d-1} + coeffs[1] W_{n+d-2} + ... + coeffs[d-1] W_n
// with initial = (W_0, ..., W_{d-1}).  The optional power_sum records a
// closed form sum a_i alpha_i^n claimed to generate the same sequence.
struct RecurrenceSpec {
    long long order = 0;
    std::vector<Poly> coeffs;
    std::vector<Poly> initial;
    std::optional<std::vector<PowerSumTerm>> power_sum;
};

// Validation failure; `path` is a JSON pointer to the offending element.
class SpecError : public std::runtime_error {
public:
    SpecError(const std::string& path, const std::string& message);
    const std::string& path() const { return path_; }

private:
    std::string path_;
};

// Schema: object with keys order (positive integer), coeffs and initial
// (arrays of `order` polynomial strings), and optional power_sum (array of
// {"a": string, "alpha": string} with nonzero alpha).  Unknown keys are
// rejected.
RecurrenceSpec load_spec(const std::string& json_text);
RecurrenceSpec load_spec_file(const std::string& path);

// Serialization with canonically printed polynomials; load_spec(save_spec(s))
// reproduces s exactly.
std::string save_spec(const RecurrenceSpec& spec);

}  // namespace powersum

#endif
