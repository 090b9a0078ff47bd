#ifndef FDEBLUR_ERRORS_HPP
#define FDEBLUR_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace fdeblur {

/// Incompatible sizes (kernel larger than image, mismatched grids, ...).
class DimensionError : public std::invalid_argument {
public:
    explicit DimensionError(const std::string& what) : std::invalid_argument(what) {}
};

/// A kernel lost all of its mass (all-zero after clamping).
class DegenerateKernelError : public std::runtime_error {
public:
    explicit DegenerateKernelError(const std::string& what) : std::runtime_error(what) {}
};

/// A spectral system has (near-)zero denominator entries everywhere it matters.
class SingularityError : public std::runtime_error {
public:
    explicit SingularityError(const std::string& what) : std::runtime_error(what) {}
};

/// Image file could not be parsed (bad magic, malformed header, truncated payload).
class FormatError : public std::runtime_error {
public:
    explicit FormatError(const std::string& what) : std::runtime_error(what) {}
};

/// Bad key or value in a configuration file.
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

/// Failure inside the coarse-to-fine driver; remembers which pyramid level broke.
class PipelineError : public std::runtime_error {
public:
    PipelineError(int level, const std::string& what)
        : std::runtime_error(what), level_(level) {}
    int level() const { return level_; }

private:
    int level_;
};

}  // namespace fdeblur

#endif
