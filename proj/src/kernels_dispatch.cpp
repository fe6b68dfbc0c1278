#include "pfolio/kernels.hpp"

#include <cstdlib>

#include "pfolio/errors.hpp"

namespace pfolio::kernels {
namespace {

const Ops* resolve(const std::string& name) {
    if (name == "scalar") return &scalar_ops();
    if (name == "avx2") {
        const Ops* ops = avx2_ops();
        if (!ops) throw ConfigError("kernel variant 'avx2' not supported on this CPU/build");
        return ops;
    }
    if (name == "auto") {
        if (const Ops* ops = avx2_ops()) return ops;
        return &scalar_ops();
    }
    throw ConfigError("unknown kernel variant '" + name + "' (expected scalar, avx2 or auto)");
}

const Ops*& active_slot() {
    static const Ops* slot = [] {
        const char* env = std::getenv("PFOLIO_KERNELS");
        return resolve(env ? env : "auto");
    }();
    return slot;
}

}  // namespace

const Ops& active() { return *active_slot(); }

void force(const std::string& name) { active_slot() = resolve(name); }

}  // namespace pfolio::kernels
