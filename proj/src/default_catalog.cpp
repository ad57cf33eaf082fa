#include "jscefr/catalog.hpp"

namespace jscefr {

// The shipped catalog. The core block carries the published level
// assignments this tool is calibrated against; the remaining blocks extend
// coverage along the MDN JavaScript reference categories (language basics,
// expressions and operators, statements and declarations, standard built-in
// objects, Web APIs). Edit a copy (--dump-default-catalog) to re-level.
std::string_view default_catalog_text() {
    static constexpr std::string_view text = R"cat(# jscefr default construct catalog
# Format: id,class,level,matcher,arg
#   node-kind    AST node kind, optionally constrained as Kind[attr=value]
#   keyword      word matched against a node's kind/op/name attributes
#   callee-path  dotted call target; '*' matches exactly one segment
#   trivia       source trivia ('comment')
#   predicate    built-in structural check
id,class,level,matcher,arg

# --- Core set: calibrated level assignments ---------------------------------
const,const,A1,keyword,const
var,var,A1,keyword,var
variable-assignment,variableAssignment,A1,node-kind,AssignmentExpression[op==]
comment,comment,A1,trivia,comment
query-selector,querySelector,A1,callee-path,*.querySelector
anonymous-function,anonymousFunction,A2,predicate,anonymous_function
json,JSON,A2,predicate,json_usage
try-catch,tryCatch,A2,node-kind,TryStatement
element-list,elementList,A2,node-kind,ElementList
declaring-class,declaringClass,B1,node-kind,ClassDeclaration
class-expression,declaringClass,B1,node-kind,ClassExpression
member-dot-expression,memberDotExpression,B1,node-kind,MemberExpression[computed=false]
this,this,B1,node-kind,ThisExpression
promise-all,promiseAll,B2,callee-path,Promise.all
async-function,asyncAwait,B2,predicate,async_function
await-expression,asyncAwait,B2,node-kind,AwaitExpression
create-element,createAppendElement,B2,callee-path,document.createElement
append-child,createAppendElement,B2,callee-path,*.appendChild
array-literal,arrayLiteral,B2,node-kind,ArrayLiteral
offline-storage-local,offlineAssetsStorage,C1,callee-path,localStorage.*
offline-storage-session,offlineAssetsStorage,C1,callee-path,sessionStorage.*
offline-storage-indexeddb,offlineAssetsStorage,C1,callee-path,indexedDB.*
closure,closure,C1,predicate,closure_return_function
primitive-coercion,primitiveCoercion,C1,predicate,primitive_coercion
canvas-3d,canvas3d,C2,predicate,canvas_3d
proxies,proxies,C2,callee-path,Proxy
weakrefs,weakRefs,C2,callee-path,WeakRef
weakrefs-finalization,weakRefs,C2,callee-path,FinalizationRegistry

# --- MDN: language basics and operators -------------------------------------
let,let,A1,keyword,let
arithmetic-add,arithmeticOperator,A1,node-kind,BinaryExpression[op=+]
arithmetic-sub,arithmeticOperator,A1,node-kind,BinaryExpression[op=-]
arithmetic-mul,arithmeticOperator,A1,node-kind,BinaryExpression[op=*]
arithmetic-div,arithmeticOperator,A1,node-kind,BinaryExpression[op=/]
arithmetic-mod,arithmeticOperator,A1,node-kind,BinaryExpression[op=%]
comparison-eq,comparisonOperator,A1,node-kind,BinaryExpression[op===]
comparison-neq,comparisonOperator,A1,node-kind,BinaryExpression[op=!=]
comparison-strict-eq,comparisonOperator,A1,node-kind,BinaryExpression[op====]
comparison-strict-neq,comparisonOperator,A1,node-kind,BinaryExpression[op=!==]
comparison-lt,comparisonOperator,A1,node-kind,BinaryExpression[op=<]
comparison-gt,comparisonOperator,A1,node-kind,BinaryExpression[op=>]
comparison-le,comparisonOperator,A1,node-kind,BinaryExpression[op=<=]
comparison-ge,comparisonOperator,A1,node-kind,BinaryExpression[op=>=]
logical-and,logicalOperator,A1,node-kind,LogicalExpression[op=&&]
logical-or,logicalOperator,A1,node-kind,LogicalExpression[op=||]
update-operator,updateOperator,A1,node-kind,UpdateExpression

# --- MDN: statements and declarations ---------------------------------------
if-statement,ifStatement,A1,node-kind,IfStatement
for-statement,forStatement,A1,node-kind,ForStatement
while-statement,whileStatement,A1,node-kind,WhileStatement
do-while-statement,doWhileStatement,A1,node-kind,DoWhileStatement
break-statement,breakStatement,A1,node-kind,BreakStatement
continue-statement,continueStatement,A1,node-kind,ContinueStatement
function-declaration,functionDeclaration,A1,node-kind,FunctionDeclaration
return-statement,returnStatement,A1,node-kind,ReturnStatement
function-call,functionCall,A1,node-kind,CallExpression
member-index-expression,memberIndexExpression,A1,node-kind,MemberExpression[computed=true]
switch-statement,switchStatement,A2,node-kind,SwitchStatement
throw-statement,throwStatement,A2,node-kind,ThrowStatement
labeled-statement,labeledStatement,A2,node-kind,LabeledStatement
object-literal,objectLiteral,A2,node-kind,ObjectLiteral
template-literal,templateLiteral,A2,node-kind,TemplateLiteral
ternary-operator,ternaryOperator,A2,node-kind,ConditionalExpression
typeof-operator,typeofOperator,A2,node-kind,UnaryExpression[op=typeof]
spread-operator,spreadOperator,A2,node-kind,SpreadElement
rest-parameter,restParameter,A2,node-kind,RestElement
destructuring-object,destructuring,A2,node-kind,ObjectPattern
destructuring-array,destructuring,A2,node-kind,ArrayPattern
compound-add,compoundAssignment,A2,node-kind,AssignmentExpression[op=+=]
compound-sub,compoundAssignment,A2,node-kind,AssignmentExpression[op=-=]
compound-mul,compoundAssignment,A2,node-kind,AssignmentExpression[op=*=]
compound-div,compoundAssignment,A2,node-kind,AssignmentExpression[op=/=]
compound-mod,compoundAssignment,A2,node-kind,AssignmentExpression[op=%=]
getter-method,getterSetter,A2,node-kind,MethodDefinition[kind=get]
setter-method,getterSetter,A2,node-kind,MethodDefinition[kind=set]
getter-property,getterSetter,A2,node-kind,Property[kind=get]
setter-property,getterSetter,A2,node-kind,Property[kind=set]
for-of-statement,forOfStatement,B1,node-kind,ForOfStatement
for-in-statement,forInStatement,B1,node-kind,ForInStatement
generator-function,generatorFunction,B1,predicate,generator_function
yield-expression,yieldExpression,B1,node-kind,YieldExpression
import-declaration,importDeclaration,B1,node-kind,ImportDeclaration
export-declaration,exportDeclaration,B1,node-kind,ExportDeclaration
dynamic-import,dynamicImport,B1,node-kind,ImportCall
optional-chaining,optionalChaining,B1,node-kind,OptionalChaining
optional-call,optionalChaining,B1,node-kind,CallExpression[optional=true]
nullish-coalescing,nullishCoalescing,B1,node-kind,NullishCoalescing
logical-assign-and,logicalAssignment,B1,node-kind,AssignmentExpression[op=&&=]
logical-assign-or,logicalAssignment,B1,node-kind,AssignmentExpression[op=||=]
logical-assign-nullish,logicalAssignment,B1,node-kind,AssignmentExpression[op=??=]
tagged-template,taggedTemplate,B1,node-kind,TaggedTemplate
for-await-of,forAwaitOf,B2,node-kind,ForOfStatement[await=true]
sparse-array,sparseArray,C1,predicate,sparse_array
nested-function,nestedFunction,C1,predicate,nested_function
strict-mode,strictMode,C2,predicate,strict_mode_directive

# --- MDN: standard built-in objects -----------------------------------------
type-conversion-parse-int,typeConversion,A2,callee-path,parseInt
type-conversion-parse-float,typeConversion,A2,callee-path,parseFloat
type-conversion-number,typeConversion,A2,callee-path,Number
type-conversion-string,typeConversion,A2,callee-path,String
type-conversion-boolean,typeConversion,A2,callee-path,Boolean
collections-map,collections,A2,callee-path,Map
collections-set,collections,A2,callee-path,Set
date-usage,dateUsage,A2,callee-path,Date
math-usage,mathUsage,A2,callee-path,Math.*
regexp-literal,regularExpression,A2,node-kind,RegExpLiteral
regexp-constructor,regularExpression,A2,callee-path,RegExp
symbol-usage,symbolUsage,B1,keyword,Symbol
meta-programming,metaProgramming,B1,callee-path,Reflect.*
promise-then,promiseThen,B2,callee-path,*.then
promise-constructor,promiseUsage,B2,callee-path,Promise
promise-resolve,promiseUsage,B2,callee-path,Promise.resolve
promise-reject,promiseUsage,B2,callee-path,Promise.reject
promise-race,promiseUsage,B2,callee-path,Promise.race
promise-all-settled,promiseUsage,B2,callee-path,Promise.allSettled
promise-any,promiseUsage,B2,callee-path,Promise.any
prototype-keyword,prototypeChain,C2,keyword,prototype
object-create,prototypeChain,C2,callee-path,Object.create
object-set-prototype,prototypeChain,C2,callee-path,Object.setPrototypeOf
object-get-prototype,prototypeChain,C2,callee-path,Object.getPrototypeOf
typed-int8,typedArray,C2,callee-path,Int8Array
typed-uint8,typedArray,C2,callee-path,Uint8Array
typed-uint8-clamped,typedArray,C2,callee-path,Uint8ClampedArray
typed-int16,typedArray,C2,callee-path,Int16Array
typed-uint16,typedArray,C2,callee-path,Uint16Array
typed-int32,typedArray,C2,callee-path,Int32Array
typed-uint32,typedArray,C2,callee-path,Uint32Array
typed-float32,typedArray,C2,callee-path,Float32Array
typed-float64,typedArray,C2,callee-path,Float64Array
typed-bigint64,typedArray,C2,callee-path,BigInt64Array
typed-biguint64,typedArray,C2,callee-path,BigUint64Array
typed-array-buffer,typedArray,C2,callee-path,ArrayBuffer
typed-data-view,typedArray,C2,callee-path,DataView
weak-map,weakRefs,C2,callee-path,WeakMap
weak-set,weakRefs,C2,callee-path,WeakSet

# --- MDN: Web APIs -----------------------------------------------------------
event-handling,eventHandling,A1,callee-path,*.addEventListener
console-usage,consoleUsage,A1,callee-path,console.*
fetch-api,fetchApi,B2,callee-path,fetch
timer-set-timeout,timerApi,B2,callee-path,setTimeout
timer-set-interval,timerApi,B2,callee-path,setInterval
timer-clear-timeout,timerApi,B2,callee-path,clearTimeout
timer-clear-interval,timerApi,B2,callee-path,clearInterval
dom-get-element-by-id,domApi,B2,callee-path,document.getElementById
dom-query-selector-all,domApi,B2,callee-path,*.querySelectorAll
dom-set-attribute,domApi,B2,callee-path,*.setAttribute
dom-get-attribute,domApi,B2,callee-path,*.getAttribute
)cat";
    return text;
}

}  // namespace jscefr
