#pragma once

#include <string>
#include <vector>

#include "itc/document.hpp"
#include "itc/interval.hpp"

namespace itc {

/// "theorem-5.1", "theorem-5.2a", ..., "theorem-5.4b".
const std::vector<std::string>& CorpusNames();

/// Boundary instance of the named 4th-order 3-dimensional theorem clause,
/// in center/radius COO form with symmetric_closure (one representative per
/// index multiset). Throws InputError listing the valid names.
Json CorpusDocument(const std::string& name);

/// ParseIntervalDocument(CorpusDocument(name)).
IntervalTensor CorpusInstance(const std::string& name);

}  // namespace itc
