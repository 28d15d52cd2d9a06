#pragma once

#include "qpf/commutant/braid_rep.hpp"
#include "qpf/commutant/generation.hpp"
#include "qpf/commutant/hecke.hpp"
#include "qpf/commutant/hom.hpp"
