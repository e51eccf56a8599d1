#pragma once

#include <stdexcept>
#include <string>

namespace pcs {

// Base class for every error the engine raises on purpose.
struct PcsError : std::runtime_error {
  explicit PcsError(const std::string& msg) : std::runtime_error(msg) {}
};

#define PCS_ERROR_TYPE(Name)                                 \
  struct Name : PcsError {                                   \
    explicit Name(const std::string& msg) : PcsError(msg) {} \
  }

// geometry
PCS_ERROR_TYPE(DegenerateVector);
PCS_ERROR_TYPE(InvalidTemperature);
PCS_ERROR_TYPE(ShapeMismatch);

// memory bank
PCS_ERROR_TYPE(EmptyBank);
PCS_ERROR_TYPE(NonUnitInput);
PCS_ERROR_TYPE(IndexOutOfRange);

// clustering
PCS_ERROR_TYPE(TooManyClusters);

// encoder / optimizer
PCS_ERROR_TYPE(CacheMismatch);
PCS_ERROR_TYPE(InvalidStep);

// losses
PCS_ERROR_TYPE(DomainMismatch);
PCS_ERROR_TYPE(EmptyPrototypeSet);
PCS_ERROR_TYPE(LabelOutOfRange);
PCS_ERROR_TYPE(UninitializedTracker);
PCS_ERROR_TYPE(GradientShapeMismatch);

// classifier
PCS_ERROR_TYPE(InvalidThreshold);
PCS_ERROR_TYPE(MissingLabeledClass);

// data pipeline
PCS_ERROR_TYPE(InvalidConfig);
PCS_ERROR_TYPE(SchemaError);
PCS_ERROR_TYPE(EmptySplit);
PCS_ERROR_TYPE(MissingClass);
PCS_ERROR_TYPE(InsufficientSamples);
PCS_ERROR_TYPE(InvalidBatchSize);

// trainer / persistence
PCS_ERROR_TYPE(NonFiniteLoss);
PCS_ERROR_TYPE(IoError);
PCS_ERROR_TYPE(FormatVersionMismatch);

// evaluator
PCS_ERROR_TYPE(MissingEvalLabels);
PCS_ERROR_TYPE(TooFewPrototypes);
PCS_ERROR_TYPE(KTooLarge);

#undef PCS_ERROR_TYPE

}  // namespace pcs
