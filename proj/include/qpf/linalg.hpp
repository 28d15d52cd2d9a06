#pragma once

#include "qpf/linalg/closure.hpp"
#include "qpf/linalg/echelon.hpp"
#include "qpf/linalg/poly.hpp"
#include "qpf/linalg/spectral.hpp"
#include "qpf/linalg/subspace.hpp"
#include "qpf/linalg/types.hpp"
