// Exception types shared by the property engine, plant model and exergy engine.

#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace turbex {

/// Input outside the domain of a correlation or operation.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// (p, T) lies on the saturation line, where it does not fix a state.
class SaturationAmbiguousError : public DomainError {
public:
    using DomainError::DomainError;
};

/// A state that falls into an IF97 region this library does not implement (3 or 5).
class UnimplementedRegionError : public DomainError {
public:
    UnimplementedRegionError(int region, const std::string& what)
        : DomainError(what), region_(region) {}
    int region() const noexcept { return region_; }

private:
    int region_;
};

/// No temperature reproduces the requested (p, h) inside the region's validity range.
class UnresolvableStateError : public std::runtime_error {
public:
    UnresolvableStateError(double p, double h, const std::string& what)
        : std::runtime_error(what), p_(p), h_(h) {}
    double pressure() const noexcept { return p_; }
    double enthalpy() const noexcept { return h_; }

private:
    double p_;
    double h_;
};

/// Malformed regime document. line() is 1-based, 0 when the fault has no line.
class SchemaError : public std::runtime_error {
public:
    SchemaError(std::string field, int line, const std::string& what)
        : std::runtime_error(what), field_(std::move(field)), line_(line) {}
    const std::string& field() const noexcept { return field_; }
    int line() const noexcept { return line_; }

private:
    std::string field_;
    int line_;
};

/// Well-formed data that violates a physical invariant (negative flow, ...).
class ValidationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A property failure while resolving one numbered stream.
class StreamError : public std::runtime_error {
public:
    StreamError(int point_id, const std::string& what)
        : std::runtime_error(what), point_id_(point_id) {}
    int point_id() const noexcept { return point_id_; }

private:
    int point_id_;
};

/// A destruction balance that came out negative.
class NonPhysicalDestructionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A constituent failure re-thrown with the component it occurred in.
class AnalysisError : public std::runtime_error {
public:
    AnalysisError(std::string component, const std::string& what)
        : std::runtime_error(what), component_(std::move(component)) {}
    const std::string& component() const noexcept { return component_; }

private:
    std::string component_;
};

}  // namespace turbex
