// Copyright 2026 The Magiclab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace magiclab {

/// Base class of every error thrown by the library.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct ZeroVector : Error {
    ZeroVector() : Error("all amplitudes are below the zero threshold") {}
};

struct DimMismatch : Error {
    DimMismatch(std::size_t a, std::size_t b)
        : Error("dimension mismatch: " + std::to_string(a) + " vs " + std::to_string(b)) {}
};

struct InvalidDim : Error {
    explicit InvalidDim(long d) : Error("invalid dimension " + std::to_string(d)) {}
};

struct IndexOutOfRange : Error {
    explicit IndexOutOfRange(const std::string& what) : Error(what) {}
};

struct InvalidAlpha : Error {
    explicit InvalidAlpha(double alpha)
        : Error("invalid Renyi order alpha = " + std::to_string(alpha)) {}
};

struct UnsupportedArity : Error {
    explicit UnsupportedArity(int n)
        : Error("unsupported qubit count " + std::to_string(n)) {}
};

struct OutOfRange : Error {
    explicit OutOfRange(const std::string& what) : Error(what) {}
};

struct OrbitOverflow : Error {
    explicit OrbitOverflow(std::size_t cap)
        : Error("orbit exceeded the configured cap of " + std::to_string(cap) + " states") {}
};

struct NotClosed : Error {
    explicit NotClosed(const std::string& what) : Error(what) {}
};

struct NotABasis : Error {
    explicit NotABasis(const std::string& what) : Error(what) {}
};

struct WrongCount : Error {
    WrongCount(std::size_t got, std::size_t want)
        : Error("wrong state count: got " + std::to_string(got) + ", want " + std::to_string(want)) {}
};

struct AssociationFailure : Error {
    explicit AssociationFailure(const std::string& what) : Error(what) {}
};

struct NoValidPartition : Error {
    explicit NoValidPartition(const std::string& what) : Error(what) {}
};

struct NonConstantOrbit : Error {
    explicit NonConstantOrbit(double spread)
        : Error("orbit concurrence spread " + std::to_string(spread) + " exceeds tolerance") {}
};

struct NotAStationaryPoint : Error {
    explicit NotAStationaryPoint(double grad_norm)
        : Error("gradient norm " + std::to_string(grad_norm) + " exceeds the stationarity threshold") {}
};

struct NotAMinimum : Error {
    double gradient_norm;
    double hessian_min_eigen;
    NotAMinimum(double g, double h)
        : Error("not an isolated minimum: gradient norm " + std::to_string(g) +
                ", smallest Hessian eigenvalue " + std::to_string(h)),
          gradient_norm(g),
          hessian_min_eigen(h) {}
};

struct UsageError : Error {
    explicit UsageError(const std::string& what) : Error(what) {}
};

}  // namespace magiclab
