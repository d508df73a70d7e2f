#pragma once

#include <stdexcept>
#include <string>

#include "hypeuler/field_table.hpp"

namespace testing_support {

inline const hypeuler::FieldTable& bundled()
{
    static const hypeuler::FieldTable table = hypeuler::load_table(hypeuler::default_table_path());
    return table;
}

inline const hypeuler::NumberFieldRecord& field(int degree, long disc)
{
    for (const auto& f : bundled().records) {
        if (f.degree == degree && f.disc == disc) {
            return f;
        }
    }
    throw std::runtime_error("no field of degree " + std::to_string(degree) + " and disc " + std::to_string(disc));
}

inline hypeuler::Rational q(const char* text)
{
    return hypeuler::Rational::parse(text);
}

}  // namespace testing_support
