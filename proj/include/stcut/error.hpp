#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace stcut {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class EndpointOutOfRange : public Error {
public:
    explicit EndpointOutOfRange(std::size_t edge_index)
        : Error("edge " + std::to_string(edge_index) + " has an endpoint out of range"),
          edge_index_(edge_index) {}
    std::size_t edge_index() const noexcept { return edge_index_; }

private:
    std::size_t edge_index_;
};

class UnknownEdgeId : public Error {
public:
    explicit UnknownEdgeId(std::uint32_t id)
        : Error("unknown edge id " + std::to_string(id)), id_(id) {}
    std::uint32_t id() const noexcept { return id_; }

private:
    std::uint32_t id_;
};

class ParseError : public Error {
public:
    ParseError(std::size_t line, std::string reason)
        : Error("line " + std::to_string(line) + ": " + reason), line_(line), reason_(std::move(reason)) {}
    std::size_t line() const noexcept { return line_; }
    const std::string& reason() const noexcept { return reason_; }

private:
    std::size_t line_;
    std::string reason_;
};

class MissingHeader : public Error {
public:
    MissingHeader() : Error("missing 'n m s t' header line") {}
};

class PathNotInGraph : public Error {
public:
    explicit PathNotInGraph(const std::string& what) : Error("path not in graph: " + what) {}
};

class SourceBanned : public Error {
public:
    SourceBanned() : Error("reachability source is in the banned node set") {}
};

class PreconditionUnreachable : public Error {
public:
    PreconditionUnreachable() : Error("sink is not reachable from source") {}
};

// Raised by the interrupted search when it drains without t and without a
// forward path edge to continue from. Cannot happen for a valid s-t path.
class SearchInvariantViolation : public Error {
public:
    explicit SearchInvariantViolation(const std::string& what) : Error("search invariant violated: " + what) {}
};

class NonInternalBridge : public Error {
public:
    explicit NonInternalBridge(std::uint32_t edge)
        : Error("bridge " + std::to_string(edge) + " of the split graph is not an internal edge"), edge_(edge) {}
    std::uint32_t edge() const noexcept { return edge_; }

private:
    std::uint32_t edge_;
};

class OrderViolation : public Error {
public:
    OrderViolation(std::size_t path_index, std::vector<std::uint32_t> expected, std::vector<std::uint32_t> found)
        : Error("cut order differs on enumerated path " + std::to_string(path_index)),
          path_index_(path_index), expected_(std::move(expected)), found_(std::move(found)) {}
    std::size_t path_index() const noexcept { return path_index_; }
    const std::vector<std::uint32_t>& expected() const noexcept { return expected_; }
    const std::vector<std::uint32_t>& found() const noexcept { return found_; }

private:
    std::size_t path_index_;
    std::vector<std::uint32_t> expected_;
    std::vector<std::uint32_t> found_;
};

class BadSpec : public Error {
public:
    explicit BadSpec(const std::string& what) : Error("bad generator spec: " + what) {}
};

}  // namespace stcut
