#pragma once

#include <stdexcept>
#include <string>

namespace winkit {

/// Invalid window specification: missing or out-of-range parameter.
class InvalidSpec : public std::invalid_argument {
public:
    explicit InvalidSpec(const std::string& what) : std::invalid_argument(what) {}
};

/// Cutoff frequency outside (0, pi).
class InvalidCutoff : public std::invalid_argument {
public:
    explicit InvalidCutoff(const std::string& what) : std::invalid_argument(what) {}
};

/// Spectrum grid too coarse for the analyzed sequence (n_fft < 4*(M+1)).
class GridTooCoarse : public std::invalid_argument {
public:
    explicit GridTooCoarse(const std::string& what) : std::invalid_argument(what) {}
};

/// No local minimum after the main-lobe peak; lobe metrics are undefined.
class NoSidelobe : public std::runtime_error {
public:
    explicit NoSidelobe(const std::string& what) : std::runtime_error(what) {}
};

/// No local minimum beyond the cutoff; stopband metrics are undefined.
class NoStopband : public std::runtime_error {
public:
    explicit NoStopband(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace winkit
