#pragma once

// Kernel file format (version 1): a self-describing JSON document with the
// shape, the literal ordering tag "graded-lex", a flat row-major entries
// array written with 17 significant decimal digits (bit-exact round trips),
// and optional generator metadata.

#include <optional>
#include <stdexcept>
#include <string>

#include "hermop/kernel.hpp"

namespace hermop {

struct FormatError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct KernelFileMetadata {
    std::string generator;  // empty when absent
    std::optional<std::uint64_t> seed;
};

struct LoadedKernel {
    KernelMatrix kernel;
    KernelFileMetadata metadata;
};

std::string kernel_file_text(const KernelMatrix& K, const KernelFileMetadata& meta = {});
void write_kernel_file(const std::string& path, const KernelMatrix& K,
                       const KernelFileMetadata& meta = {});

// Throws FormatError naming the violated invariant.
LoadedKernel parse_kernel_file(const std::string& text);
LoadedKernel read_kernel_file(const std::string& path);

}  // namespace hermop
