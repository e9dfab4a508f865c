#pragma once

#include <stdexcept>
#include <string>

namespace fdqpt {

/// Base class for every numerical-guard or precondition failure raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InvalidParams : public Error {
public:
    using Error::Error;
};

/// The Floquet gap closes at the requested quasimomentum; band labels are undefined.
class GaplessPoint : public Error {
public:
    using Error::Error;
};

class StepCountTooSmall : public Error {
public:
    using Error::Error;
};

/// delta1 == 0 together with omega == delta2: every k is critical.
class DegenerateDelta1 : public Error {
public:
    using Error::Error;
};

/// The real part of a Fisher zero diverges. `positive()` tells which way.
class UndefinedTau : public Error {
public:
    UndefinedTau(const std::string& what, bool positive) : Error(what), positive_(positive) {}
    bool positive() const noexcept { return positive_; }

private:
    bool positive_;
};

class PhaseUndefined : public Error {
public:
    using Error::Error;
};

class BandUnsupported : public Error {
public:
    using Error::Error;
};

class GridTooCoarse : public Error {
public:
    using Error::Error;
};

class NearCriticalTime : public Error {
public:
    using Error::Error;
};

class GapClosure : public Error {
public:
    using Error::Error;
};

class InvalidSize : public Error {
public:
    using Error::Error;
};

class BoundaryMismatch : public Error {
public:
    using Error::Error;
};

}  // namespace fdqpt
