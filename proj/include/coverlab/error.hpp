#ifndef COVERLAB_ERROR_HPP
#define COVERLAB_ERROR_HPP

#include <chrono>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace coverlab {

enum class ErrorKind {
    IndexOutOfRange,
    SelfLoop,
    EmptyPiece,
    BadParameter,
    BadInput,
    ParseError,
    FormatError,
    Disconnected,
    DisconnectedMember,
    FreenessViolated,
    InternalInvariantBroken,
    PathTooLong,
    StarTooLarge,
    Timeout,
};

constexpr std::string_view to_string(ErrorKind k) {
    switch (k) {
        case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
        case ErrorKind::SelfLoop: return "SelfLoop";
        case ErrorKind::EmptyPiece: return "EmptyPiece";
        case ErrorKind::BadParameter: return "BadParameter";
        case ErrorKind::BadInput: return "BadInput";
        case ErrorKind::ParseError: return "ParseError";
        case ErrorKind::FormatError: return "FormatError";
        case ErrorKind::Disconnected: return "Disconnected";
        case ErrorKind::DisconnectedMember: return "DisconnectedMember";
        case ErrorKind::FreenessViolated: return "FreenessViolated";
        case ErrorKind::InternalInvariantBroken: return "InternalInvariantBroken";
        case ErrorKind::PathTooLong: return "PathTooLong";
        case ErrorKind::StarTooLarge: return "StarTooLarge";
        case ErrorKind::Timeout: return "Timeout";
    }
    return "Unknown";
}

class Error : public std::runtime_error {
  public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}
    ErrorKind kind() const noexcept { return kind_; }

  private:
    ErrorKind kind_;
};

/// Raised when an input graph contains a member of a forbidden family.
/// `embedding[i]` is the host vertex playing pattern vertex i.
class FreenessViolated : public Error {
  public:
    FreenessViolated(std::string member, std::vector<std::size_t> embedding)
        : Error(ErrorKind::FreenessViolated, "graph contains an induced " + member),
          member_(std::move(member)),
          embedding_(std::move(embedding)) {}
    const std::string& member() const noexcept { return member_; }
    const std::vector<std::size_t>& embedding() const noexcept { return embedding_; }

  private:
    std::string member_;
    std::vector<std::size_t> embedding_;
};

/// Wall-clock cutoff shared by the exact searches. Default-constructed means unlimited.
class Deadline {
  public:
    using Clock = std::chrono::steady_clock;
    Deadline() = default;
    explicit Deadline(std::chrono::duration<double> budget)
        : at_(Clock::now() + std::chrono::duration_cast<Clock::duration>(budget)) {}
    static Deadline after_seconds(double s) { return Deadline(std::chrono::duration<double>(s)); }

    bool expired() const { return at_ && Clock::now() >= *at_; }
    bool unlimited() const { return !at_; }

  private:
    std::optional<Clock::time_point> at_;
};

}  // namespace coverlab

#endif  // COVERLAB_ERROR_HPP
