/*
 * Copyright 2026 the primavoid authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef PRIMAVOID_ERRORS_HPP
#define PRIMAVOID_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace primavoid {

enum class errc {
    ok = 0,
    invalid_argument,
    parse_error,
    io_error,
    not_prime,
    supplied_polynomial_reducible,
    degree_mismatch,
    ctx_mismatch,
    division_by_zero,
    input_too_large,
    zero_element,
    not_primitive,
    field_too_large,
    not_a_divisor,
    basis_not_independent,
    length_mismatch,
    wrong_count,
    not_general_position,
    set_too_large,
    wrong_characteristic,
    numerical_drift,
    domain_error,
    no_threshold_below_cap,
    internal,
};

const char* errc_name(errc c);

/// Library error: an errc plus a human-readable message.
class Error : public std::runtime_error {
public:
    Error(errc code, const std::string& msg)
        : std::runtime_error(std::string(errc_name(code)) + ": " + msg), code_(code) {}

    errc code() const noexcept { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& msg) { throw Error(code, msg); }

inline const char* errc_name(errc c) {
    switch (c) {
        case errc::ok: return "Ok";
        case errc::invalid_argument: return "InvalidArgument";
        case errc::parse_error: return "ParseError";
        case errc::io_error: return "IoError";
        case errc::not_prime: return "NotPrime";
        case errc::supplied_polynomial_reducible: return "SuppliedPolynomialReducible";
        case errc::degree_mismatch: return "DegreeMismatch";
        case errc::ctx_mismatch: return "CtxMismatch";
        case errc::division_by_zero: return "DivisionByZero";
        case errc::input_too_large: return "InputTooLarge";
        case errc::zero_element: return "ZeroElement";
        case errc::not_primitive: return "NotPrimitive";
        case errc::field_too_large: return "FieldTooLarge";
        case errc::not_a_divisor: return "NotADivisor";
        case errc::basis_not_independent: return "BasisNotIndependent";
        case errc::length_mismatch: return "LengthMismatch";
        case errc::wrong_count: return "WrongCount";
        case errc::not_general_position: return "NotGeneralPosition";
        case errc::set_too_large: return "SetTooLarge";
        case errc::wrong_characteristic: return "WrongCharacteristic";
        case errc::numerical_drift: return "NumericalDrift";
        case errc::domain_error: return "DomainError";
        case errc::no_threshold_below_cap: return "NoThresholdBelowCap";
        case errc::internal: return "Internal";
    }
    return "Unknown";
}

} // namespace primavoid

#endif
