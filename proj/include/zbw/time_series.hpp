#pragma once

#include <string>
#include <vector>

#include "zbw/constants.hpp"

namespace zbw {

/// Sampled expectation trajectories or moments: one shared time axis plus
/// named channels with unit labels.
struct TimeSeries {
  std::vector<double> t;
  std::vector<std::string> channel_names;
  std::vector<std::string> channel_units;
  std::vector<std::vector<double>> channels;  // channels[c][sample]
  std::string time_unit;
  FrameKind frame = FrameKind::SI;

  std::size_t samples() const { return t.size(); }

  void add_channel(std::string name, std::string unit) {
    channel_names.push_back(std::move(name));
    channel_units.push_back(std::move(unit));
    channels.emplace_back();
  }
};

}  // namespace zbw
