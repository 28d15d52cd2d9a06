#pragma once

#include "qpf/functors/eval.hpp"
#include "qpf/functors/expr.hpp"
#include "qpf/functors/structure.hpp"
