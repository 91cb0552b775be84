#pragma once

#include <string>
#include <vector>

#include "mmb/blobs.hpp"
#include "mmb/frame.hpp"

namespace mmb {

// Wire format, one record per line, LF endings:
//   frame,track_id,x,y,w,h,label[,score]
// Lines starting with '#' are ignored. Boxes are top-left anchored.
std::vector<GroundTruthRecord> load_annotations(const std::string& csv_path);
void save_annotations(const std::string& csv_path,
                      const std::vector<GroundTruthRecord>& records);

std::vector<Detection> load_detections(const std::string& csv_path);
void save_detections(const std::string& csv_path, const std::vector<Detection>& detections);

// Serialization helper shared by save paths: integral values print without
// a decimal point so integer boxes round-trip exactly.
std::string format_number(double v);

}  // namespace mmb
