// Copyright 2026 The binassoc Authors
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

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace binassoc {

// Error taxonomy. The three bases map onto the CLI exit codes:
// ConfigError -> 1, DataError -> 2, NumericError -> 3.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class ConfigError : public Error {
public:
  using Error::Error;
};

class DataError : public Error {
public:
  using Error::Error;
};

class NumericError : public Error {
public:
  using Error::Error;
};

class ZeroSample : public DataError {
public:
  ZeroSample() : DataError("contingency table has zero total count") {}
};

class IndexOutOfRange : public DataError {
public:
  explicit IndexOutOfRange(const std::string& what) : DataError(what) {}
};

class SamePair : public DataError {
public:
  explicit SamePair(std::size_t i)
      : DataError("pair requires two distinct columns, got (" +
                  std::to_string(i) + ", " + std::to_string(i) + ")") {}
};

class UnsupportedKind : public ConfigError {
public:
  explicit UnsupportedKind(const std::string& what) : ConfigError(what) {}
};

class ParseError : public DataError {
public:
  ParseError(std::size_t line, const std::string& what)
      : DataError("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

private:
  std::size_t line_;
};

class EmptyInput : public DataError {
public:
  explicit EmptyInput(const std::string& what = "input contains no records")
      : DataError(what) {}
};

class AllColumnsDropped : public DataError {
public:
  explicit AllColumnsDropped(std::size_t min_members)
      : DataError("no column has at least " + std::to_string(min_members) +
                  " set rows; the filtered matrix would be empty") {}
};

class InvalidProbability : public ConfigError {
public:
  explicit InvalidProbability(double p)
      : ConfigError("probability " + std::to_string(p) +
                    " is outside [0, 1]") {}
};

class ConstantResponse : public NumericError {
public:
  explicit ConstantResponse(std::size_t column)
      : NumericError("column " + std::to_string(column) +
                     " is constant; it cannot be regressed on") {}
};

class RankDeficient : public NumericError {
public:
  RankDeficient(const std::string& what, std::vector<std::size_t> columns)
      : NumericError(what), columns_(std::move(columns)) {}
  const std::vector<std::size_t>& columns() const { return columns_; }

private:
  std::vector<std::size_t> columns_;
};

class NoConvergence : public NumericError {
public:
  NoConvergence(const std::string& what, int iterations)
      : NumericError(what), iterations_(iterations) {}
  int iterations() const { return iterations_; }

private:
  int iterations_;
};

class NonFinite : public NumericError {
public:
  explicit NonFinite(const std::string& what) : NumericError(what) {}
};

class IoFailure : public DataError {
public:
  explicit IoFailure(const std::string& what) : DataError(what) {}
};

}  // namespace binassoc
