#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace tridecomp {

using Vertex = std::uint32_t;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class LoopEdgeError : public Error {
 public:
  LoopEdgeError(std::size_t line, Vertex v)
      : Error("line " + std::to_string(line) + ": loop edge at vertex " + std::to_string(v)),
        line_(line),
        vertex_(v) {}
  std::size_t line() const noexcept { return line_; }
  Vertex vertex() const noexcept { return vertex_; }

 private:
  std::size_t line_;
  Vertex vertex_;
};

class EmptyGraphError : public Error {
 public:
  EmptyGraphError() : Error("graph must have at least one vertex") {}
};

class GenerationTimeout : public Error {
 public:
  explicit GenerationTimeout(std::size_t attempts)
      : Error("no sample met the minimum degree after " + std::to_string(attempts) + " attempts"),
        attempts_(attempts) {}
  std::size_t attempts() const noexcept { return attempts_; }

 private:
  std::size_t attempts_;
};

inline std::string format_clique(const std::vector<Vertex>& vs) {
  std::string s = "(";
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(vs[i]);
  }
  return s + ")";
}

class NotACliqueError : public Error {
 public:
  explicit NotACliqueError(std::vector<Vertex> vertices)
      : Error("vertex set " + format_clique(vertices) + " is not a clique"),
        vertices_(std::move(vertices)) {}
  const std::vector<Vertex>& vertices() const noexcept { return vertices_; }

 private:
  std::vector<Vertex> vertices_;
};

// A clique on 2..4 vertices with no extension to a clique one larger: the delegation
// of demand cannot continue past it, so the weighting is undefined.
class DelegationUndefined : public Error {
 public:
  explicit DelegationUndefined(std::vector<Vertex> prefix)
      : Error("clique " + format_clique(prefix) + " has no extension to a K" +
              std::to_string(prefix.size() + 1)),
        prefix_(std::move(prefix)) {}
  const std::vector<Vertex>& prefix() const noexcept { return prefix_; }

 private:
  std::vector<Vertex> prefix_;
};

class DomainError : public Error {
 public:
  explicit DomainError(const std::string& constraint)
      : Error("point outside the program domain: " + constraint), constraint_(constraint) {}
  const std::string& constraint() const noexcept { return constraint_; }

 private:
  std::string constraint_;
};

class SamplerStarved : public Error {
 public:
  explicit SamplerStarved(std::size_t rejections)
      : Error("feasible-point sampler starved after " + std::to_string(rejections) +
              " rejections") {}
};

}  // namespace tridecomp
