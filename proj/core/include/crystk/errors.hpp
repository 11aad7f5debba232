#pragma once

#include <stdexcept>
#include <string>

namespace crystk {

// Error kinds named after the contract violations they signal.  All of them
// derive from std::runtime_error so callers can catch broadly or precisely.
#define CRYSTK_ERROR(Name)                                        \
    struct Name : std::runtime_error {                           \
        explicit Name(const std::string& what)                   \
            : std::runtime_error(std::string(#Name ": ") + what) \
        {                                                        \
        }                                                        \
    }

CRYSTK_ERROR(NotOrthogonal);
CRYSTK_ERROR(ClosureBoundExceeded);
CRYSTK_ERROR(UnknownName);
CRYSTK_ERROR(NotASublattice);
CRYSTK_ERROR(GeneratorNotInLattice);
CRYSTK_ERROR(NonIntegralResult);
CRYSTK_ERROR(CatalogInconsistent);
CRYSTK_ERROR(NotSubproper);
CRYSTK_ERROR(PreconditionViolated);
CRYSTK_ERROR(NotASubgroup);
CRYSTK_ERROR(UnrecognizedType);
CRYSTK_ERROR(UnknownType);
CRYSTK_ERROR(DimensionMismatch);
CRYSTK_ERROR(MissingCellData);
CRYSTK_ERROR(UnknownVCType);
CRYSTK_ERROR(NotInCatalog);
CRYSTK_ERROR(GoldenMismatch);

#undef CRYSTK_ERROR

} // namespace crystk
