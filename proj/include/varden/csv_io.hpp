#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "varden/model.hpp"

namespace varden {

// Input rows are `x,y` or `x,y,truth` where truth is a cluster index >= 0, or
// `noise` (-1 is accepted as a synonym). A first row whose leading field is not
// numeric is a header; with a header, extra columns are allowed and truth is
// taken from a column named `truth` or `label` (or the third of three).
// Blank lines are skipped; line numbers count them.
Dataset read_csv(const std::filesystem::path& path);
Dataset parse_csv(std::string_view text);

// Dataset (with truth, when present) in the format read_csv accepts.
std::string format_dataset_csv(const Dataset& d);
void write_dataset_csv(const Dataset& d, const std::filesystem::path& path);

// Labeled output: header `x,y,cluster,class` (`x0,...,x{d-1}` when d != 2),
// cluster -1 for noise, class one of core/border/noise, dataset row order.
std::string format_labeled_csv(const Dataset& d, const Labeling& labeling);
void write_csv(const Dataset& d, const Labeling& labeling, const std::filesystem::path& path);
void write_csv(const Dataset& d, const AdaptiveResult& result, const std::filesystem::path& path);

// Reads back the cluster/class columns of a labeled CSV. num_clusters is the
// largest id + 1; a missing class column yields border/noise from the id.
Labeling read_labeling_csv(const std::filesystem::path& path);
Labeling parse_labeling_csv(std::string_view text);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view contents);

}  // namespace varden
