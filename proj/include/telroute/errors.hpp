// Copyright 2026 The telroute Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace telroute {

/// Base of every error raised by the library. Each subclass maps onto one
/// CLI exit status (see tools/telroute_cli.cpp).
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A parameter lies outside its mathematical domain.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A density matrix or channel fails a physicality check.
class ValidationError : public Error {
 public:
  enum class Property { kHermiticity, kTrace, kPositivity, kStructure };

  ValidationError(Property property, double magnitude, const std::string& what)
      : Error(what), property_(property), magnitude_(magnitude) {}

  Property property() const noexcept { return property_; }
  double magnitude() const noexcept { return magnitude_; }

 private:
  Property property_;
  double magnitude_;
};

class EmptyPathError : public Error {
 public:
  EmptyPathError() : Error("path must contain at least one link") {}
};

class NoPathError : public Error {
 public:
  using Error::Error;
};

/// Dijkstra was requested on a network containing a link without an
/// additive weight.
class NotAdditiveError : public Error {
 public:
  explicit NotAdditiveError(std::string link_id)
      : Error("link '" + link_id +
              "' has no additive weight; use the exact router"),
        link_id_(std::move(link_id)) {}

  const std::string& link_id() const noexcept { return link_id_; }

 private:
  std::string link_id_;
};

class CapExceededError : public Error {
 public:
  using Error::Error;
};

class GenerationError : public Error {
 public:
  using Error::Error;
};

class DegenerateError : public Error {
 public:
  using Error::Error;
};

class PlanConflictError : public Error {
 public:
  using Error::Error;
};

class UnphysicalSwapError : public Error {
 public:
  using Error::Error;
};

/// Malformed input file. `context` names the offending line or field.
class ParseError : public Error {
 public:
  ParseError(std::string context, const std::string& what)
      : Error(context.empty() ? what : context + ": " + what),
        context_(std::move(context)) {}

  const std::string& context() const noexcept { return context_; }

 private:
  std::string context_;
};

}  // namespace telroute
