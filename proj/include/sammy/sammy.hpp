#pragma once

#include "sammy/builders.hpp"
#include "sammy/category.hpp"
#include "sammy/engine/basic.hpp"
#include "sammy/engine/comma.hpp"
#include "sammy/engine/composition_functor.hpp"
#include "sammy/engine/functor_category.hpp"
#include "sammy/engine/kan.hpp"
#include "sammy/engine/limits.hpp"
#include "sammy/engine/presentation.hpp"
#include "sammy/engine/product.hpp"
#include "sammy/error.hpp"
#include "sammy/iso.hpp"
#include "sammy/kolmogorov.hpp"
#include "sammy/lang/goedel.hpp"
#include "sammy/lang/interpreter.hpp"
#include "sammy/lang/parser.hpp"
#include "sammy/lang/program.hpp"
#include "sammy/serialize.hpp"
#include "sammy/stdlib/functions.hpp"
#include "sammy/stdlib/numbers.hpp"
#include "sammy/stdlib/pointer_programs.hpp"
#include "sammy/stdlib/predicates.hpp"
#include "sammy/stdlib/turing.hpp"
#include "sammy/validate.hpp"
