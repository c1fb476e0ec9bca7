#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace islrec {

/// Root of every exception thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Precondition violated by the caller (dimension mismatch, bad parameter).
class InvalidArgument : public Error {
public:
    using Error::Error;
};

/// A file could not be opened, listed or written.
class IoError : public Error {
public:
    IoError(const std::string& path, const std::string& what)
        : Error(path + ": " + what), path_(path) {}

    const std::string& path() const noexcept { return path_; }

private:
    std::string path_;
};

/// Malformed PPM/PGM input. The offset is the byte position at which the
/// problem was detected.
class ImageParseError : public Error {
public:
    enum class Kind { BadMagic, MalformedHeader, UnsupportedMaxval, TruncatedPayload };

    ImageParseError(Kind kind, std::size_t offset, const std::string& what)
        : Error(what + " (byte offset " + std::to_string(offset) + ")"),
          kind_(kind), offset_(offset), detail_(what) {}

    Kind kind() const noexcept { return kind_; }
    std::size_t offset() const noexcept { return offset_; }
    /// Message without the offset suffix.
    const std::string& detail() const noexcept { return detail_; }

private:
    Kind kind_;
    std::size_t offset_;
    std::string detail_;
};

/// Malformed template database file. Line numbers are 1-based.
class DbFormatError : public Error {
public:
    enum class Kind { BadHeader, VersionMismatch, CountMismatch, MalformedReal, MalformedRecord };

    DbFormatError(Kind kind, std::size_t line, const std::string& what)
        : Error("line " + std::to_string(line) + ": " + what), kind_(kind), line_(line), detail_(what) {}

    Kind kind() const noexcept { return kind_; }
    std::size_t line() const noexcept { return line_; }
    /// Message without the line prefix.
    const std::string& detail() const noexcept { return detail_; }

private:
    Kind kind_;
    std::size_t line_;
    std::string detail_;
};

/// Malformed `key = value` configuration.
class ConfigError : public Error {
public:
    using Error::Error;
};

/// Runtime failure inside the recognition pipeline.
class PipelineError : public Error {
public:
    using Error::Error;
};

/// Jacobi iteration hit its sweep cap without reaching the off-diagonal
/// tolerance.
class ConvergenceError : public PipelineError {
public:
    ConvergenceError(int sweeps, double residual)
        : PipelineError("eigen decomposition did not converge after " + std::to_string(sweeps) +
                        " sweeps (off-diagonal norm " + std::to_string(residual) + ")"),
          sweeps_(sweeps), residual_(residual) {}

    int sweeps() const noexcept { return sweeps_; }
    double residual() const noexcept { return residual_; }

private:
    int sweeps_;
    double residual_;
};

}  // namespace islrec
