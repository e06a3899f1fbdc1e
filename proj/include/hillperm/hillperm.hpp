#pragma once

#include "hillperm/avalanche.hpp"
#include "hillperm/bits.hpp"
#include "hillperm/cipher.hpp"
#include "hillperm/cryptanalysis.hpp"
#include "hillperm/error.hpp"
#include "hillperm/io.hpp"
#include "hillperm/modular.hpp"
#include "hillperm/permutation.hpp"
#include "hillperm/presets.hpp"
