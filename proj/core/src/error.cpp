#include "gazekit/error.hpp"

namespace gazekit {

const char* errc_name(errc code) {
  switch (code) {
    case errc::malformed_document: return "MalformedDocument";
    case errc::missing_field: return "MissingField";
    case errc::non_monotonic_timestamps: return "NonMonotonicTimestamps";
    case errc::header_mismatch: return "HeaderMismatch";
    case errc::row_arity: return "RowArity";
    case errc::unparseable_number: return "UnparseableNumber";
    case errc::unlabeled_data: return "UnlabeledData";
    case errc::empty_input: return "EmptyInput";
    case errc::too_few_samples: return "TooFewSamples";
    case errc::zero_variance: return "ZeroVariance";
    case errc::invalid_sample: return "InvalidSample";
    case errc::empty_after_filtering: return "EmptyAfterFiltering";
    case errc::all_removed: return "AllRemoved";
    case errc::too_few_rows: return "TooFewRows";
    case errc::zero_variance_column: return "ZeroVarianceColumn";
    case errc::dimension_mismatch: return "DimensionMismatch";
    case errc::k_out_of_range: return "KOutOfRange";
    case errc::single_class: return "SingleClass";
    case errc::length_mismatch: return "LengthMismatch";
    case errc::k_too_large: return "KTooLarge";
    case errc::degenerate_fold: return "DegenerateFold";
    case errc::wrong_dimensionality: return "WrongDimensionality";
    case errc::out_of_range: return "OutOfRange";
    case errc::invalid_config: return "InvalidConfig";
    case errc::io_error: return "IoError";
    case errc::shape_mismatch: return "ShapeMismatch";
    case errc::empty_matrix: return "EmptyMatrix";
  }
  return "UnknownError";
}

}  // namespace gazekit
