#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "temporient/core.hpp"

namespace temporient {

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what);
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

Instance parse_instance(std::string_view text);
std::string serialize_instance(const Instance& instance);
std::string serialize_instance(const TemporalGraph& g);
std::string serialize_instance(const MultiLabelTemporalGraph& g);

// Orientation files: `-> U V LABEL` lines (multi-label graphs use a comma list
// of the edge's labels). Lines starting with `YES`, `NO` or `#` are skipped so
// solver output can be fed back in. `+ U V LABEL` lines describe added edges.
struct OrientationFile {
    Orientation orientation;
    std::vector<DirectedTimeEdge> added;
};

OrientationFile parse_orientation(std::string_view text, const TemporalGraph& g);
OrientationFile parse_orientation(std::string_view text, const MultiLabelTemporalGraph& g);

std::string format_orientation(const TemporalGraph& g, const Orientation& f);
std::string format_orientation(const MultiLabelTemporalGraph& g, const Orientation& f);
std::string format_additions(const TemporalGraph& g, const std::vector<DirectedTimeEdge>& added);

// Parses a decimal label in [1, 2^32-1].
Label parse_label(std::string_view token, std::size_t line);

}  // namespace temporient
