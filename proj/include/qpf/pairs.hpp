#pragma once

#include "qpf/pairs/braid.hpp"
#include "qpf/pairs/frame.hpp"
#include "qpf/pairs/io.hpp"
#include "qpf/pairs/pair.hpp"
