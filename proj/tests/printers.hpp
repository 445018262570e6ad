#pragma once

#include "motivic/qseries.hpp"
#include "motivic/text.hpp"
#include "motivic/torus.hpp"

#include <doctest.h>

namespace doctest {

template <> struct StringMaker<motivic::MotiveScalar> {
    static String convert(const motivic::MotiveScalar &s) { return motivic::to_string(s).c_str(); }
};

template <> struct StringMaker<motivic::QSeries> {
    static String convert(const motivic::QSeries &f) { return motivic::to_string(f).c_str(); }
};

template <> struct StringMaker<motivic::TorusElement> {
    static String convert(const motivic::TorusElement &x)
    {
        std::string out;
        for (const auto &[v, c] : x.terms()) {
            out += (out.empty() ? "" : " + ") + ("(" + motivic::to_string(c) + ") x^" + motivic::to_string(v));
        }
        return out.empty() ? "0" : out.c_str();
    }
};

} // namespace doctest
