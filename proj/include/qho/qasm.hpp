#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "qho/circuit.hpp"

namespace qho {

struct QasmOptions {
    /// Emit CH as u3(pi/4,0,0); cx; u3(-pi/4,0,0) instead of a ch statement,
    /// for toolchains lacking ch. The decomposition is exact.
    bool decompose_ch = false;
};

/// Rewrites a circuit into the emitted gate subset {x, h, u1, u3, cx, ccx, ch}:
///   ACNOT(c,t)        -> x(c); cx(c,t); x(c)
///   ACU3(th,ph,la;c,t)-> x(c); u1((la+ph)/2)(c); u1((la-ph)/2)(t); cx(c,t);
///                        u3(-th/2, 0, -(ph+la)/2)(t); cx(c,t); u3(th/2, ph, 0)(t); x(c)
///   CH(c,t)           -> unchanged, or the 3-gate form above when decompose_ch
/// All rewrites are matrix-exact.
Circuit lower_circuit(const Circuit& c, const QasmOptions& opts = {});

/// OpenQASM 2.0 text: header, one qreg of num_qubits, one creg of
/// |system_qubits|, the lowered gates, then measure q[system_qubits[k]] -> c[k].
/// Byte-deterministic; angles printed with enough digits to round-trip exactly.
std::string emit_qasm(const Circuit& c, const QasmOptions& opts = {});

class qasm_error : public std::runtime_error {
  public:
    qasm_error(int line, int col, const std::string& msg);
    int line() const { return line_; }
    int col() const { return col_; }

  private:
    int line_;
    int col_;
};

/// Parses the emitted subset (u1, u2, u3, x, h, cx, ccx, ch, one qreg, at most
/// one creg, measure, // comments; angle expressions may use numbers, pi,
/// parentheses and + - * /). u2(phi, lambda) is read as u3(pi/2, phi, lambda).
/// system_qubits come from the measure statements in classical-bit order; a
/// program without measurements gets system_qubits = all qubits.
/// Throws qasm_error with line/column on syntax errors, unsupported statements,
/// or register mismatches.
Circuit parse_qasm(std::string_view text);

}  // namespace qho
