#pragma once

#include <string>
#include <utility>
#include "hoch/algebra.hpp"

namespace hoch {

struct SchemaError : std::runtime_error {
    explicit SchemaError(const std::string& w) : std::runtime_error(w) {}
};

struct AlgebraFile {
    DgAlgebra algebra;
    std::optional<FrobeniusData> frobenius;
};

// Strict parser for the algebra description schema; unknown fields rejected.
AlgebraFile parse_algebra_json(const std::string& text);
AlgebraFile load_algebra_file(const std::string& path);

std::string algebra_to_json(const AlgebraFile& a);

}  // namespace hoch
