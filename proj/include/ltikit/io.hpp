#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "ltikit/lti.hpp"
#include "ltikit/signal.hpp"
#include "ltikit/spectral.hpp"

namespace ltikit::io {

// 17 significant digits, '.' separator.
std::string format_double(double v);

/// Signal CSV: header `k,t,value` (or `k,value` without a sample rate),
/// one sample per row, strictly increasing k. Gaps in k read as zeros.
void write_signal_csv(std::ostream& os, const DiscreteSignal& s);
DiscreteSignal read_signal_csv(std::istream& is);

// Single-column CSV with header `tap`.
void write_taps_csv(std::ostream& os, const std::vector<double>& taps);
std::vector<double> read_taps_csv(std::istream& is);

/// Spectrum CSV: `n,f_hz,re,im,mag,phase`. Digital grids without a sample
/// rate report f_hz in cycles per sample.
void write_spectrum_csv(std::ostream& os, const SpectrumFrame& f);
SpectrumFrame read_spectrum_csv(std::istream& is);

// `k,scale_1,...,scale_M`.
void write_scales_csv(std::ostream& os, const std::vector<DiscreteSignal>& scales);
std::vector<DiscreteSignal> read_scales_csv(std::istream& is);

// {"domain": "s"|"z", "dt": number|null, "b": [...], "a": [...]}
nlohmann::json tf_to_json(const TransferFunction& tf);
TransferFunction tf_from_json(const nlohmann::json& j);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& contents);

}  // namespace ltikit::io
