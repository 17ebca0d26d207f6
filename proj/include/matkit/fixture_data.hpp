#pragma once

// Generated by tools/make_fixtures; do not edit by hand.
// Each entry is byte-identical to the committed file at `path`; a test
// enforces that.

#include <vector>

namespace matkit {

struct FixtureSource {
    const char* kind;  // tag suffix, e.g. "spike-like"
    const char* path;  // repo-relative path of the committed file
    const char* text;  // exact file contents
};

inline const std::vector<FixtureSource>& fixture_sources() {
    static const std::vector<FixtureSource> sources = {};
    return sources;
}

}  // namespace matkit
