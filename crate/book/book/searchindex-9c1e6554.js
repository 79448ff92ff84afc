window.search = Object.assign(window.search, JSON.parse('{"results_options":{"limit_results":30,"teaser_word_count":30},"search_options":{"bool":"OR","expand":true,"fields":{"body":{"boost":1},"breadcrumbs":{"boost":1},"title":{"boost":2}}},"doc_urls":["introduction.html#introduction","geometry.html#geometry-and-thresholds","discretization.html#discretization","discretization.html#cell-centered-grids-and-ghost-closures","discretization.html#end-conditions","discretization.html#dumping-the-operator","spectrum.html#bracketed-spectra","spectrum.html#quick-start","spectrum.html#where-the-error-bars-come-from","spectrum.html#cross-validation-against-the-auxiliary-layout","criticality.html#critical-window-lengths","criticality.html#detector-1-the-threshold-indicator","criticality.html#detector-2-count-bisection","criticality.html#the-generalized-threshold-mode","emergence.html#emergence-asymptotics","emergence.html#the-first-coefficient-μ₁","emergence.html#the-cutoff-and-the-corrector","emergence.html#the-ε-sweep-cross-check","cli.html#command-line","cli.html#typical-invocations","cli.html#configuration","cli.html#outputs","cli.html#caching-and-determinism"],"index":{"fields":["title","body","breadcrumbs"],"pipeline":["trimmer","stopWordFilter","stemmer"],"ref":"id","version":"0.9.5","index":{"body":{"root":{"docs":{},"df":0,"0":{"docs":{"0":{"tf":1.0},"1":{"tf":1.0},"11":{"tf":1.0},"12":{"tf":1.0},"13":{"tf":1.0},"2":{"tf":1.0},"20":{"tf":1.4142135623730951}},"df":7,".":{"docs":{},"df":0,"0":{"docs":{"16":{"tf":1.4142135623730951},"3":{"tf":1.0}},"df":2,"1":{"docs":{"12":{"tf":1.0}},"df":1},"2":{"docs":{},"df":0,",":{"docs":{},"df":0,"0":{"docs":{},"df":0,".":{"docs":{},"df":0,"0":{"docs":{},"df":0,"4":{"docs":{},"df":0,",":{"docs":{},"df":0,"0":{"docs":{},"df":0,".":{"docs":{},"df":0,"0":{"docs":{},"df":0,"8":{"docs":{},"df":0,",":{"docs":{},"df":0,"0":{"docs":{},"df":0,".":{"docs":{},"df":0,"1":{"docs":{},"df":0,"6":{"docs":{"19":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}},"1":{"docs":{"12":{"tf":1.0},"16":{"tf":1.0}},"df":2},"2":{"docs":{},"df":0,"5":{"docs":{"1":{"tf":1.4142135623730951}},"df":1},"6":{"docs":{},"df":0,"3":{"docs":{},"df":0,"3":{"docs":{"12":{"tf":1.0}},"df":1}}}},"5":{"docs":{"1":{"tf":1.0},"19":{"tf":1.0}},"df":2}}},"1":{"docs":{"1":{"tf":1.0},"11":{"tf":1.0},"12":{"tf":1.0},"13":{"tf":1.4142135623730951},"15":{"tf":1.0},"16":{"tf":1.7320508075688772},"19":{"tf":2.0},"20":{"tf":1.4142135623730951},"7":{"tf":1.0}},"df":9,".":{"docs":{},"df":0,"0":{"docs":{"1":{"tf":1.4142135623730951},"12":{"tf":1.0},"20":{"tf":1.0},"3":{"tf":1.4142135623730951},"9":{"tf":1.0}},"df":5,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"a":{"docs":{},"df":0,"b":{"docs":{"16":{"tf":1.0}},"df":1}}}}},"2":{"docs":{"12":{"tf":1.4142135623730951}},"df":1},"5":{"docs":{"1":{"tf":1.0}},"df":1}},"0":{"docs":{"19":{"tf":1.0}},"df":1},"2":{"docs":{"16":{"tf":1.4142135623730951}},"df":1},"3":{"docs":{"19":{"tf":1.0}},"df":1},"6":{"docs":{"20":{"tf":1.0}},"df":1},"7":{"docs":{"21":{"tf":1.0}},"df":1},"e":{"docs":{"16":{"tf":1.4142135623730951}},"df":1}},"2":{"docs":{"1":{"tf":1.7320508075688772},"12":{"tf":1.0},"16":{"tf":1.7320508075688772},"19":{"tf":1.4142135623730951},"20":{"tf":1.4142135623730951},"3":{"tf":1.0},"9":{"tf":1.0}},"df":7,".":{"docs":{},"df":0,"0":{"docs":{"1":{"tf":1.0},"20":{"tf":1.0},"7":{"tf":1.0}},"df":3},"5":{"docs":{"20":{"tf":1.0}},"df":1}},"/":{"docs":{},"df":0,"d":{"docs":{},"df":0,")":{"docs":{},"df":0,"·":{"docs":{},"df":0,"s":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"(":{"docs":{},"df":0,"√":{"docs":{},"df":0,"e":{"docs":{},"df":0,"_":{"docs":{},"df":0,"m":{"docs":{},"df":0,"·":{"docs":{},"df":0,"x":{"docs":{"1":{"tf":1.0}},"df":1}}}}}}}}}}}}}},"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"s":{"docs":{},"df":0,"(":{"docs":{},"df":0,"√":{"docs":{},"df":0,"e":{"docs":{},"df":0,"_":{"docs":{},"df":0,"m":{"docs":{"3":{"tf":1.0}},"df":1}}}}}}}}},"3":{"docs":{"20":{"tf":1.0}},"df":1,".":{"docs":{},"df":0,"5":{"docs":{"19":{"tf":1.0}},"df":1}},"2":{"docs":{},"df":0,".":{"docs":{},"df":0,"0":{"docs":{"12":{"tf":1.0}},"df":1}}},"d":{"docs":{"7":{"tf":1.0}},"df":1}},"4":{"docs":{"15":{"tf":1.0},"16":{"tf":1.0},"19":{"tf":1.0}},"df":3,"0":{"docs":{"19":{"tf":1.0}},"df":1},"8":{"docs":{"3":{"tf":1.0}},"df":1},"d":{"docs":{"0":{"tf":1.0},"1":{"tf":1.0}},"df":2}},"6":{"docs":{"7":{"tf":1.4142135623730951}},"df":1},"8":{"docs":{"12":{"tf":1.0},"3":{"tf":1.0},"7":{"tf":1.0},"9":{"tf":1.0}},"df":4,"0":{"docs":{},"df":0,"0":{"docs":{"19":{"tf":1.0}},"df":1}}},"_":{"docs":{},"df":0,"l":{"docs":{"2":{"tf":1.0}},"df":1},"m":{"docs":{"3":{"tf":1.4142135623730951},"4":{"tf":1.0}},"df":2,"(":{"docs":{},"df":0,"x":{"docs":{"1":{"tf":1.0}},"df":1}}}},"a":{"docs":{},"df":0,"b":{"docs":{},"df":0,"o":{"docs":{},"df":0,"v":{"docs":{"17":{"tf":1.0}},"df":1}}},"c":{"docs":{},"df":0,"c":{"docs":{},"df":0,"u":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"i":{"docs":{"12":{"tf":1.0}},"df":1}}}}}}},"d":{"docs":{},"df":0,"d":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{"21":{"tf":1.0}},"df":1}}}}},"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"s":{"docs":{"0":{"tf":1.0},"22":{"tf":1.0}},"df":2}}}}}},"f":{"docs":{},"df":0,"f":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"22":{"tf":1.0}},"df":1}}}}},"g":{"docs":{},"df":0,"a":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{"16":{"tf":1.0},"17":{"tf":1.4142135623730951},"9":{"tf":1.4142135623730951}},"df":3}}}}},"r":{"docs":{},"df":0,"e":{"docs":{"12":{"tf":1.0},"17":{"tf":1.0}},"df":2,"e":{"docs":{},"df":0,"m":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"10":{"tf":1.0},"15":{"tf":1.0}},"df":2}}}}}}}},"l":{"docs":{},"df":0,"g":{"docs":{},"df":0,"e":{"docs":{},"df":0,"b":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{"16":{"tf":1.0}},"df":1}}}}},"i":{"docs":{},"df":0,"g":{"docs":{},"df":0,"n":{"docs":{"11":{"tf":1.0}},"df":1}}},"l":{"docs":{},"df":0,"o":{"docs":{},"df":0,"w":{"docs":{},"df":0,"(":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"u":{"docs":{},"df":0,"s":{"docs":{"1":{"tf":1.0},"12":{"tf":1.0},"16":{"tf":1.0},"3":{"tf":1.0},"7":{"tf":1.0},"9":{"tf":1.0}},"df":6}}}}}}}},"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"g":{"docs":{"1":{"tf":1.0},"12":{"tf":1.0}},"df":2}}},"p":{"docs":{},"df":0,"h":{"docs":{},"df":0,"a":{"docs":{},"df":0,"1":{"docs":{},"df":0,"^":{"docs":{},"df":0,"2":{"docs":{"16":{"tf":1.0}},"df":1}}}}}},"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"n":{"docs":{"1":{"tf":1.7320508075688772},"8":{"tf":1.0}},"df":2}}}}},"m":{"docs":{},"df":0,"p":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{},"df":0,"u":{"docs":{},"df":0,"d":{"docs":{"13":{"tf":1.0}},"df":1}}}}}}},"n":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"y":{"docs":{},"df":0,"t":{"docs":{"1":{"tf":1.0},"9":{"tf":1.0}},"df":2}}}},"d":{"docs":{},"df":0,"/":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{"21":{"tf":1.0}},"df":1}}}},"s":{"docs":{},"df":0,"w":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"6":{"tf":1.0}},"df":1}}}}},"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"16":{"tf":1.4142135623730951}},"df":1}}}},"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"f":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{},"df":0,"i":{"docs":{"4":{"tf":1.0},"8":{"tf":1.0}},"df":2}}}}}}},"s":{"docs":{},"df":0,"s":{"docs":{},"df":0,"e":{"docs":{},"df":0,"m":{"docs":{},"df":0,"b":{"docs":{},"df":0,"l":{"docs":{"16":{"tf":1.0},"21":{"tf":1.0},"3":{"tf":1.0},"5":{"tf":1.0}},"df":4,"e":{"docs":{},"df":0,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"g":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"d":{"docs":{"3":{"tf":1.0}},"df":1}}}}}}}}}},"r":{"docs":{},"df":0,"t":{"docs":{},"df":0,"!":{"docs":{},"df":0,"(":{"docs":{},"df":0,"(":{"docs":{},"df":0,"c":{"docs":{},"df":0,"u":{"docs":{},"df":0,"t":{"docs":{},"df":0,"o":{"docs":{},"df":0,"f":{"docs":{},"df":0,"f":{"docs":{},"df":0,".":{"docs":{},"df":0,"x":{"docs":{},"df":0,"i":{"docs":{},"df":0,"(":{"docs":{},"df":0,"0":{"docs":{},"df":0,".":{"docs":{},"df":0,"2":{"docs":{},"df":0,"6":{"docs":{"16":{"tf":1.0}},"df":1}}}}}}}}}}}}}},"m":{"docs":{},"df":0,"u":{"docs":{},"df":0,"1":{"docs":{},"df":0,"_":{"docs":{},"df":0,"f":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"m":{"docs":{},"df":0,"_":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"p":{"docs":{},"df":0,"h":{"docs":{},"df":0,"a":{"docs":{},"df":0,"(":{"docs":{},"df":0,"2":{"docs":{},"df":0,".":{"docs":{},"df":0,"0":{"docs":{"16":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}},"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"p":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"t":{"docs":{},"df":0,".":{"docs":{},"df":0,"a":{"docs":{},"df":0,"u":{"docs":{},"df":0,"x":{"docs":{},"df":0,"_":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"y":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{},"df":0,"_":{"docs":{},"df":0,"o":{"docs":{},"df":0,"k":{"docs":{"9":{"tf":1.0}},"df":1}}}}}}}}}}}}}}},"c":{"docs":{},"df":0,"h":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"k":{"docs":{},"df":0,"s":{"docs":{},"df":0,".":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"(":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"l":{"docs":{},"df":0,"(":{"docs":{},"df":0,"|":{"docs":{},"df":0,"c":{"docs":{"9":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}},"o":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"7":{"tf":1.0}},"df":1}}}}}}}}}}}},"s":{"docs":{},"df":0,"h":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"l":{"docs":{},"df":0,"o":{"docs":{},"df":0,"w":{"docs":{"12":{"tf":1.0}},"df":1}}}}}},"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,".":{"docs":{},"df":0,"b":{"docs":{},"df":0,"o":{"docs":{},"df":0,"t":{"docs":{},"df":0,"t":{"docs":{},"df":0,"o":{"docs":{},"df":0,"m":{"docs":{},"df":0,"_":{"docs":{},"df":0,"d":{"docs":{},"df":0,"i":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{},"df":0,"h":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"t":{"docs":{},"df":0,"(":{"docs":{},"df":0,"2":{"docs":{},"df":0,".":{"docs":{},"df":0,"0":{"docs":{"1":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}},"t":{"docs":{},"df":0,"o":{"docs":{},"df":0,"p":{"docs":{},"df":0,"_":{"docs":{},"df":0,"d":{"docs":{},"df":0,"i":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{},"df":0,"h":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"t":{"docs":{"1":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}},"_":{"docs":{},"df":0,"e":{"docs":{},"df":0,"q":{"docs":{},"df":0,"!":{"docs":{},"df":0,"(":{"docs":{},"df":0,"b":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,".":{"docs":{},"df":0,"a":{"docs":{},"df":0,".":{"docs":{},"df":0,"a":{"docs":{},"df":0,"s":{"docs":{},"df":0,"y":{"docs":{},"df":0,"m":{"docs":{},"df":0,"m":{"docs":{},"df":0,"e":{"docs":{},"df":0,"t":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{"3":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}},"c":{"docs":{},"df":0,"u":{"docs":{},"df":0,"t":{"docs":{},"df":0,"o":{"docs":{},"df":0,"f":{"docs":{},"df":0,"f":{"docs":{},"df":0,".":{"docs":{},"df":0,"x":{"docs":{},"df":0,"i":{"docs":{},"df":0,"(":{"docs":{},"df":0,"0":{"docs":{},"df":0,".":{"docs":{},"df":0,"0":{"docs":{"16":{"tf":1.0}},"df":1}}},"c":{"docs":{},"df":0,"u":{"docs":{},"df":0,"t":{"docs":{},"df":0,"o":{"docs":{},"df":0,"f":{"docs":{},"df":0,"f":{"docs":{},"df":0,".":{"docs":{},"df":0,"s":{"docs":{},"df":0,"u":{"docs":{},"df":0,"p":{"docs":{},"df":0,"p":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"t":{"docs":{},"df":0,"_":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"d":{"docs":{},"df":0,"i":{"docs":{},"df":0,"u":{"docs":{"16":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}}}}}}}}},"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"a":{"docs":{},"df":0,"y":{"docs":{},"df":0,"_":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"o":{"docs":{},"df":0,"(":{"docs":{},"df":0,"0":{"docs":{},"df":0,".":{"docs":{},"df":0,"0":{"docs":{"3":{"tf":1.0}},"df":1}}}}}}}}}}}}}}},"p":{"docs":{},"df":0,".":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{},"df":0,"p":{"docs":{},"df":0,"l":{"docs":{},"df":0,"y":{"docs":{},"df":0,"(":{"docs":{},"df":0,"p":{"docs":{},"df":0,".":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{},"df":0,"p":{"docs":{},"df":0,"l":{"docs":{},"df":0,"y":{"docs":{},"df":0,"(":{"docs":{},"df":0,"(":{"docs":{},"df":0,"0":{"docs":{},"df":0,".":{"docs":{},"df":0,"5":{"docs":{"1":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}},"s":{"docs":{},"df":0,"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,".":{"docs":{},"df":0,"t":{"docs":{},"df":0,"h":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"h":{"docs":{},"df":0,"o":{"docs":{},"df":0,"l":{"docs":{},"df":0,"d":{"docs":{"1":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}},"y":{"docs":{},"df":0,"m":{"docs":{},"df":0,"p":{"docs":{},"df":0,"t":{"docs":{},"df":0,"o":{"docs":{},"df":0,"t":{"docs":{"14":{"tf":1.0}},"df":1}}}}}}},"t":{"docs":{},"df":0,"o":{"docs":{},"df":0,"m":{"docs":{"22":{"tf":1.0}},"df":1}},"t":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"k":{"docs":{"10":{"tf":1.0}},"df":1}}}}},"u":{"docs":{},"df":0,"x":{"docs":{},"df":0,"i":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{"0":{"tf":1.0},"1":{"tf":2.23606797749979},"9":{"tf":2.0}},"df":3}}}}}}}},"v":{"docs":{},"df":0,"a":{"docs":{},"df":0,"i":{"docs":{},"df":0,"l":{"docs":{"4":{"tf":1.0}},"df":1}}}}},"b":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"4":{"tf":1.0}},"df":1,"w":{"docs":{},"df":0,"i":{"docs":{},"df":0,"d":{"docs":{},"df":0,"t":{"docs":{},"df":0,"h":{"docs":{"4":{"tf":1.0}},"df":1}}}}}}},"r":{"docs":{"8":{"tf":1.0}},"df":1}},"e":{"docs":{},"df":0,"f":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{"1":{"tf":1.0}},"df":1}}},"h":{"docs":{},"df":0,"a":{"docs":{},"df":0,"v":{"docs":{"0":{"tf":1.0}},"df":1}}},"l":{"docs":{},"df":0,"o":{"docs":{},"df":0,"w":{"docs":{"0":{"tf":1.0},"10":{"tf":1.0},"12":{"tf":1.0},"15":{"tf":1.0},"18":{"tf":1.0},"6":{"tf":1.0},"7":{"tf":1.0}},"df":7}}},"t":{"docs":{},"df":0,"w":{"docs":{},"df":0,"e":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{"0":{"tf":1.0},"10":{"tf":1.0},"16":{"tf":1.0},"9":{"tf":1.0}},"df":4}}}}},"y":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"16":{"tf":1.0}},"df":1}}}}},"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{"18":{"tf":1.0}},"df":1}}}},"s":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"12":{"tf":1.7320508075688772},"17":{"tf":1.0}},"df":2}}}},"t":{"docs":{"22":{"tf":1.0}},"df":1}},"l":{"docs":{},"df":0,"o":{"docs":{},"df":0,"c":{"docs":{},"df":0,"k":{"docs":{"0":{"tf":1.0},"4":{"tf":1.0}},"df":2}}}},"o":{"docs":{},"df":0,"t":{"docs":{},"df":0,"h":{"docs":{"0":{"tf":1.4142135623730951},"1":{"tf":1.0},"12":{"tf":1.0},"15":{"tf":1.0},"19":{"tf":1.0},"21":{"tf":1.0},"7":{"tf":1.0}},"df":7},"t":{"docs":{},"df":0,"o":{"docs":{},"df":0,"m":{"docs":{"0":{"tf":1.4142135623730951},"1":{"tf":1.7320508075688772}},"df":2}}}},"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"0":{"tf":1.0},"1":{"tf":1.0},"13":{"tf":1.0},"4":{"tf":1.7320508075688772},"9":{"tf":1.0}},"df":5,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{"0":{"tf":1.4142135623730951},"1":{"tf":1.0},"11":{"tf":1.0},"3":{"tf":1.0}},"df":4}}}}}}},"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"k":{"docs":{},"df":0,"e":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.4142135623730951},"1":{"tf":1.0},"6":{"tf":1.0},"8":{"tf":1.0}},"df":4}}}}}},"u":{"docs":{},"df":0,"d":{"docs":{},"df":0,"g":{"docs":{},"df":0,"e":{"docs":{},"df":0,"t":{"docs":{"1":{"tf":1.0}},"df":1}}}},"i":{"docs":{},"df":0,"l":{"docs":{},"df":0,"d":{"docs":{},"df":0,"_":{"docs":{},"df":0,"g":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"d":{"docs":{"3":{"tf":1.0}},"df":1,"(":{"docs":{},"df":0,"s":{"docs":{},"df":0,"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{"3":{"tf":1.0}},"df":1}}}}}}}}}}},"t":{"docs":{"0":{"tf":1.4142135623730951}},"df":1}}},"n":{"docs":{},"df":0,"d":{"docs":{},"df":0,"l":{"docs":{"3":{"tf":1.0}},"df":1}}}},"y":{"docs":{},"df":0,"p":{"docs":{},"df":0,"a":{"docs":{},"df":0,"s":{"docs":{},"df":0,"s":{"docs":{"22":{"tf":1.0}},"df":1}}}}}},"c":{"docs":{"12":{"tf":1.0},"16":{"tf":1.0}},"df":2,".":{"docs":{},"df":0,"o":{"docs":{},"df":0,"k":{"docs":{"9":{"tf":1.0}},"df":1}}},"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"h":{"docs":{"0":{"tf":1.0},"18":{"tf":1.0},"19":{"tf":1.0},"22":{"tf":3.1622776601683795}},"df":4}},"n":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{"22":{"tf":1.0}},"df":1}}},"p":{"docs":{},"df":0,"t":{"docs":{},"df":0,"u":{"docs":{},"df":0,"r":{"docs":{"1":{"tf":1.0}},"df":1}}}},"r":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{"1":{"tf":1.4142135623730951},"12":{"tf":1.0},"21":{"tf":1.0}},"df":3}}}},"e":{"docs":{},"df":0,"l":{"docs":{},"df":0,"l":{"docs":{"0":{"tf":1.0},"11":{"tf":1.0},"3":{"tf":2.23606797749979},"4":{"tf":1.0}},"df":4}},"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"0":{"tf":1.0},"3":{"tf":1.7320508075688772}},"df":2}}}},"r":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"f":{"docs":{},"df":0,"i":{"docs":{"0":{"tf":1.0},"8":{"tf":1.0}},"df":2}}}}}},"h":{"docs":{},"df":0,"a":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"3":{"tf":1.0}},"df":1}},"n":{"docs":{},"df":0,"g":{"docs":{"11":{"tf":1.4142135623730951},"8":{"tf":1.0}},"df":2},"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,"l":{"docs":{"1":{"tf":1.0},"16":{"tf":1.7320508075688772},"4":{"tf":1.0}},"df":3}}}},"p":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"0":{"tf":1.0},"13":{"tf":1.0}},"df":2}}}}},"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{"1":{"tf":1.0}},"df":1}}}}},"c":{"docs":{},"df":0,"k":{"docs":{"0":{"tf":1.4142135623730951},"1":{"tf":1.0},"13":{"tf":1.0},"16":{"tf":1.0},"17":{"tf":1.0},"9":{"tf":1.4142135623730951}},"df":6}}},"o":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{"3":{"tf":1.0},"7":{"tf":1.0}},"df":2}}}},"i":{"docs":{"19":{"tf":1.0}},"df":1},"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"s":{"docs":{},"df":0,"s":{"docs":{"1":{"tf":1.0}},"df":1,"i":{"docs":{},"df":0,"f":{"docs":{"8":{"tf":1.0}},"df":1,"i":{"docs":{"8":{"tf":1.0}},"df":1}}}}}},"i":{"docs":{"5":{"tf":1.0},"9":{"tf":1.0}},"df":2},"o":{"docs":{},"df":0,"s":{"docs":{},"df":0,"e":{"docs":{"0":{"tf":1.0},"16":{"tf":1.0},"4":{"tf":1.0}},"df":3},"u":{"docs":{},"df":0,"r":{"docs":{"0":{"tf":1.0},"12":{"tf":1.0},"16":{"tf":1.0},"3":{"tf":1.4142135623730951},"4":{"tf":1.7320508075688772}},"df":5}}}}},"o":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"s":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{"7":{"tf":1.0}},"df":1}}}}}},"d":{"docs":{},"df":0,"e":{"docs":{"0":{"tf":1.4142135623730951},"20":{"tf":1.4142135623730951},"22":{"tf":1.0}},"df":3}},"e":{"docs":{},"df":0,"f":{"docs":{},"df":0,"f":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{},"df":0,"i":{"docs":{"0":{"tf":1.0},"15":{"tf":1.7320508075688772},"16":{"tf":1.0},"17":{"tf":1.0},"18":{"tf":1.0},"19":{"tf":1.0}},"df":6}}}}}},"l":{"docs":{"21":{"tf":1.0},"5":{"tf":1.0}},"df":2,"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"7":{"tf":1.0}},"df":1}}}},"u":{"docs":{},"df":0,"m":{"docs":{},"df":0,"n":{"docs":{"4":{"tf":1.4142135623730951}},"df":1}}}},"m":{"docs":{},"df":0,"b":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{"1":{"tf":1.0}},"df":1}}}}}}}},"e":{"docs":{"0":{"tf":1.0},"15":{"tf":1.0},"20":{"tf":1.0},"8":{"tf":1.0}},"df":4},"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"0":{"tf":1.0},"1":{"tf":1.0},"18":{"tf":1.4142135623730951},"20":{"tf":1.0},"22":{"tf":1.0}},"df":5}}},"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"20":{"tf":1.0}},"df":1}}},"u":{"docs":{},"df":0,"t":{"docs":{"1":{"tf":1.0}},"df":1}}},"p":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{"17":{"tf":1.0}},"df":1}},"o":{"docs":{},"df":0,"n":{"docs":{"16":{"tf":1.0}},"df":1}},"u":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.4142135623730951},"1":{"tf":1.0},"14":{"tf":1.0},"15":{"tf":1.0},"8":{"tf":1.0}},"df":5}}}},"n":{"docs":{},"df":0,"d":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.7320508075688772},"1":{"tf":1.0},"16":{"tf":1.4142135623730951},"3":{"tf":1.0},"4":{"tf":1.4142135623730951}},"df":5}}},"f":{"docs":{},"df":0,"i":{"docs":{},"df":0,"g":{"docs":{"20":{"tf":1.4142135623730951}},"df":1,"u":{"docs":{},"df":0,"r":{"docs":{"20":{"tf":1.7320508075688772},"22":{"tf":1.0}},"df":2}}},"r":{"docs":{},"df":0,"m":{"docs":{"17":{"tf":1.0}},"df":1}}}},"s":{"docs":{},"df":0,"t":{"docs":{},"df":0,"r":{"docs":{},"df":0,"u":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"3":{"tf":1.4142135623730951},"4":{"tf":1.0}},"df":2}}}}}},"t":{"docs":{},"df":0,"a":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"20":{"tf":1.0}},"df":1}}},"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0},"22":{"tf":1.0}},"df":2}}},"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"u":{"docs":{},"df":0,"u":{"docs":{},"df":0,"m":{"docs":{"1":{"tf":1.4142135623730951},"10":{"tf":1.0}},"df":2}}}}},"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"l":{"docs":{"1":{"tf":1.0}},"df":1}}}},"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"g":{"docs":{"12":{"tf":1.0},"20":{"tf":1.0},"3":{"tf":1.0}},"df":3}}}}},"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"d":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"21":{"tf":1.0},"5":{"tf":1.0}},"df":2}}}}},"r":{"docs":{},"df":0,"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"0":{"tf":1.0},"15":{"tf":1.4142135623730951},"16":{"tf":1.0}},"df":3}}},"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{"16":{"tf":1.7320508075688772},"4":{"tf":1.0}},"df":2}}}}}}},"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0},"1":{"tf":1.0},"12":{"tf":2.0},"17":{"tf":1.0},"4":{"tf":1.4142135623730951},"8":{"tf":1.4142135623730951},"9":{"tf":1.0}},"df":7,"_":{"docs":{},"df":0,"b":{"docs":{},"df":0,"e":{"docs":{},"df":0,"l":{"docs":{},"df":0,"o":{"docs":{},"df":0,"w":{"docs":{},"df":0,"(":{"docs":{},"df":0,"1":{"docs":{},"df":0,".":{"docs":{},"df":0,"0":{"docs":{"12":{"tf":1.4142135623730951}},"df":1}}}}}}}}}}}},"p":{"docs":{},"df":0,"l":{"docs":{"4":{"tf":1.0}},"df":1}}}},"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{"0":{"tf":1.4142135623730951}},"df":1}}},"i":{"docs":{},"df":0,"t":{"docs":{},"df":0,"g":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"d":{"docs":{"12":{"tf":1.0}},"df":1,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"w":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{},"df":0,"h":{"docs":{},"df":0,"_":{"docs":{},"df":0,"s":{"docs":{},"df":0,"p":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"g":{"docs":{},"df":0,"(":{"docs":{},"df":0,"3":{"docs":{},"df":0,".":{"docs":{},"df":0,"0":{"docs":{"12":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}},"i":{"docs":{},"df":0,"c":{"docs":{"0":{"tf":1.7320508075688772},"10":{"tf":1.7320508075688772},"11":{"tf":1.0},"12":{"tf":1.0},"14":{"tf":1.0},"18":{"tf":1.7320508075688772},"19":{"tf":1.7320508075688772}},"df":7}}}},"o":{"docs":{},"df":0,"s":{"docs":{},"df":0,"s":{"docs":{"0":{"tf":1.4142135623730951},"1":{"tf":1.4142135623730951},"11":{"tf":1.4142135623730951},"16":{"tf":1.4142135623730951},"17":{"tf":1.0},"9":{"tf":1.0}},"df":6}}},"u":{"docs":{},"df":0,"c":{"docs":{},"df":0,"i":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{"3":{"tf":1.0}},"df":1}}}}}},"s":{"docs":{},"df":0,"v":{"docs":{"21":{"tf":1.0}},"df":1,"|":{"docs":{},"df":0,"j":{"docs":{},"df":0,"s":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"|":{"docs":{},"df":0,"b":{"docs":{},"df":0,"o":{"docs":{},"df":0,"t":{"docs":{},"df":0,"h":{"docs":{"21":{"tf":1.0}},"df":1}}}}}}}}}}}},"u":{"docs":{},"df":0,"b":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{"17":{"tf":1.0}},"df":1}}},"t":{"docs":{},"df":0,"o":{"docs":{},"df":0,"f":{"docs":{},"df":0,"f":{"docs":{"16":{"tf":1.4142135623730951}},"df":1,"s":{"docs":{},"df":0,"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{"16":{"tf":1.0}},"df":1,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,"w":{"docs":{},"df":0,"(":{"docs":{},"df":0,"0":{"docs":{},"df":0,".":{"docs":{},"df":0,"2":{"docs":{},"df":0,"6":{"docs":{"16":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}},"d":{"docs":{"0":{"tf":1.4142135623730951},"1":{"tf":2.0},"12":{"tf":1.0},"19":{"tf":1.4142135623730951},"2":{"tf":1.0},"20":{"tf":1.0}},"df":6,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"a":{"docs":{},"df":0,"y":{"docs":{"0":{"tf":1.0},"13":{"tf":1.0},"16":{"tf":1.0},"3":{"tf":1.0},"4":{"tf":1.4142135623730951},"7":{"tf":1.0}},"df":6,"_":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"o":{"docs":{"3":{"tf":1.0}},"df":1}}}}}}}}},"e":{"docs":{},"df":0,"p":{"docs":{"12":{"tf":1.4142135623730951}},"df":1}},"f":{"docs":{},"df":0,"a":{"docs":{},"df":0,"u":{"docs":{},"df":0,"l":{"docs":{},"df":0,"t":{"docs":{"21":{"tf":1.0},"22":{"tf":1.0},"7":{"tf":1.0}},"df":3}}}},"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{"16":{"tf":1.0}},"df":1}}}},"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{"10":{"tf":1.0}},"df":1}}},"n":{"docs":{},"df":0,"s":{"docs":{"4":{"tf":1.0}},"df":1}},"s":{"docs":{},"df":0,"i":{"docs":{},"df":0,"g":{"docs":{},"df":0,"n":{"docs":{"10":{"tf":1.0}},"df":1}}}},"t":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"h":{"docs":{"0":{"tf":1.0}},"df":1}}},"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{"0":{"tf":1.0},"10":{"tf":1.0},"11":{"tf":1.0},"12":{"tf":1.7320508075688772},"18":{"tf":1.0},"19":{"tf":1.0}},"df":6}}}},"r":{"docs":{},"df":0,"m":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"15":{"tf":1.0},"22":{"tf":1.0}},"df":2,"i":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0},"22":{"tf":1.0}},"df":2}}}}}}}}}},"i":{"docs":{},"df":0,"a":{"docs":{},"df":0,"g":{"docs":{},"df":0,"n":{"docs":{},"df":0,"o":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{"12":{"tf":1.0}},"df":1}}}}}},"f":{"docs":{},"df":0,"f":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"0":{"tf":1.0}},"df":1}}}},"g":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{"21":{"tf":1.0}},"df":1}}},"m":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"s":{"docs":{},"df":0,"i":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{"11":{"tf":1.0}},"df":1}}}}}}},"r":{"docs":{"22":{"tf":1.0}},"df":1,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{"22":{"tf":1.0}},"df":1}}}}}},"i":{"docs":{},"df":0,"c":{"docs":{},"df":0,"h":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.7320508075688772},"1":{"tf":1.7320508075688772},"15":{"tf":1.0},"3":{"tf":1.0},"4":{"tf":1.0},"8":{"tf":1.4142135623730951}},"df":6,"/":{"docs":{},"df":0,"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,"u":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"n":{"docs":{"3":{"tf":1.0}},"df":1}}}}}}}}}}}}}}},"s":{"docs":{},"df":0,"a":{"docs":{},"df":0,"g":{"docs":{},"df":0,"r":{"docs":{"12":{"tf":1.0}},"df":1}}},"c":{"docs":{},"df":0,"i":{"docs":{},"df":0,"p":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"20":{"tf":1.0}},"df":1}}}}},"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"p":{"docs":{"16":{"tf":1.0}},"df":1},"t":{"docs":{"0":{"tf":1.7320508075688772},"1":{"tf":1.4142135623730951},"10":{"tf":1.4142135623730951},"11":{"tf":1.0},"13":{"tf":1.0},"18":{"tf":1.0},"2":{"tf":1.4142135623730951},"3":{"tf":2.0},"4":{"tf":1.4142135623730951},"7":{"tf":1.0}},"df":10,"e":{"docs":{},"df":0,"_":{"docs":{},"df":0,"s":{"docs":{},"df":0,"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{},"df":0,"r":{"docs":{},"df":0,"u":{"docs":{},"df":0,"m":{"docs":{},"df":0,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"s":{"docs":{},"df":0,"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{"7":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}},"t":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"c":{"docs":{"10":{"tf":1.0}},"df":1}}}}},"v":{"docs":{},"df":0,"e":{"docs":{"0":{"tf":1.0}},"df":1}}},"o":{"docs":{},"df":0,"c":{"docs":{"0":{"tf":1.0}},"df":1},"n":{"docs":{},"df":0,"e":{"docs":{"0":{"tf":1.0}},"df":1}},"u":{"docs":{},"df":0,"b":{"docs":{},"df":0,"l":{"docs":{"7":{"tf":1.0}},"df":1}}},"w":{"docs":{},"df":0,"n":{"docs":{"4":{"tf":1.0}},"df":1}}},"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"f":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0}},"df":1}},"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{"16":{"tf":1.0}},"df":1},"r":{"docs":{"1":{"tf":1.0}},"df":1}}}}},"u":{"docs":{},"df":0,"m":{"docs":{},"df":0,"p":{"docs":{"21":{"tf":1.0},"5":{"tf":1.4142135623730951}},"df":2}}}},"e":{"docs":{"0":{"tf":1.7320508075688772},"1":{"tf":1.0},"14":{"tf":1.0},"16":{"tf":1.0}},"df":4,"_":{"docs":{},"df":0,"m":{"docs":{"1":{"tf":1.0},"3":{"tf":1.0}},"df":2}},"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"h":{"docs":{"0":{"tf":1.4142135623730951},"1":{"tf":1.0},"14":{"tf":1.0},"17":{"tf":1.4142135623730951},"4":{"tf":1.0},"7":{"tf":1.0},"8":{"tf":1.0}},"df":7}}},"d":{"docs":{},"df":0,"g":{"docs":{"0":{"tf":1.7320508075688772},"1":{"tf":1.4142135623730951},"16":{"tf":1.0}},"df":3}},"f":{"docs":{},"df":0,"f":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"7":{"tf":1.0}},"df":1}}}}},"i":{"docs":{},"df":0,"g":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"f":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"1":{"tf":1.4142135623730951},"4":{"tf":1.0}},"df":2}}}}},"p":{"docs":{},"df":0,"a":{"docs":{},"df":0,"i":{"docs":{},"df":0,"r":{"docs":{"1":{"tf":1.0}},"df":1}}}},"v":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"u":{"docs":{"0":{"tf":2.449489742783178},"1":{"tf":2.23606797749979},"10":{"tf":1.4142135623730951},"11":{"tf":1.0},"12":{"tf":1.7320508075688772},"13":{"tf":1.0},"14":{"tf":1.0},"17":{"tf":1.0},"4":{"tf":1.7320508075688772},"6":{"tf":1.0},"8":{"tf":1.4142135623730951},"9":{"tf":1.4142135623730951}},"df":12}}},"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{"1":{"tf":1.0},"3":{"tf":1.0},"8":{"tf":1.0}},"df":3}}}}}}}}}},"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"m":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{"1":{"tf":1.0}},"df":1}}}}}}}},"i":{"docs":{},"df":0,"m":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"3":{"tf":1.0}},"df":1}}}},"l":{"docs":{"19":{"tf":2.0},"20":{"tf":2.0}},"df":2,"_":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{"16":{"tf":1.0}},"df":1}}}}}},"s":{"docs":{},"df":0,"e":{"docs":{},"df":0,"w":{"docs":{},"df":0,"h":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"0":{"tf":1.0}},"df":1}}}}}}},"m":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"g":{"docs":{"12":{"tf":1.0},"14":{"tf":1.0},"18":{"tf":1.4142135623730951},"19":{"tf":1.4142135623730951}},"df":4}}}},"n":{"docs":{},"df":0,"d":{"docs":{"0":{"tf":1.4142135623730951},"11":{"tf":1.0},"15":{"tf":1.0},"19":{"tf":1.0},"4":{"tf":2.0},"7":{"tf":1.0},"8":{"tf":1.4142135623730951}},"df":7,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{"3":{"tf":1.0}},"df":1,"i":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"d":{"docs":{},"df":0,"i":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{},"df":0,"h":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"t":{"docs":{"3":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}},"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"g":{"docs":{},"df":0,"i":{"docs":{"1":{"tf":1.0},"15":{"tf":1.0},"3":{"tf":1.0},"4":{"tf":1.4142135623730951}},"df":4}}}},"f":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"c":{"docs":{"8":{"tf":1.0}},"df":1}}}},"o":{"docs":{},"df":0,"u":{"docs":{},"df":0,"g":{"docs":{},"df":0,"h":{"docs":{"7":{"tf":1.0}},"df":1}}}},"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"r":{"docs":{"22":{"tf":1.0}},"df":1}}},"v":{"docs":{},"df":0,"i":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{"22":{"tf":1.0}},"df":1}}}}}},"p":{"docs":{"19":{"tf":1.0}},"df":1},"q":{"docs":{},"df":0,"u":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{"13":{"tf":1.0},"16":{"tf":1.0}},"df":2}},"i":{"docs":{},"df":0,"v":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{"16":{"tf":1.0}},"df":1}}}}}},"r":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{"1":{"tf":1.0},"10":{"tf":1.0},"12":{"tf":1.0},"20":{"tf":1.4142135623730951},"3":{"tf":1.0},"4":{"tf":1.0},"7":{"tf":1.0},"8":{"tf":1.0}},"df":8}}}},"s":{"docs":{},"df":0,"c":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{"1":{"tf":1.0}},"df":1}}},"s":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{"0":{"tf":1.0},"1":{"tf":1.0},"10":{"tf":1.0}},"df":3}}}}},"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"m":{"docs":{"8":{"tf":1.0}},"df":1}}}},"v":{"docs":{"7":{"tf":1.0}},"df":1,".":{"docs":{},"df":0,"l":{"docs":{},"df":0,"o":{"docs":{},"df":0,"w":{"docs":{"7":{"tf":1.0}},"df":1}}},"m":{"docs":{"7":{"tf":1.0}},"df":1},"p":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{"7":{"tf":1.0}},"df":1}}},"u":{"docs":{},"df":0,"p":{"docs":{},"df":0,"p":{"docs":{"7":{"tf":1.0}},"df":1}}}},"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"u":{"docs":{"12":{"tf":1.0},"16":{"tf":1.0}},"df":2}}},"e":{"docs":{},"df":0,"n":{"docs":{"1":{"tf":1.4142135623730951}},"df":1,"/":{"docs":{},"df":0,"o":{"docs":{},"df":0,"d":{"docs":{},"df":0,"d":{"docs":{"8":{"tf":1.0}},"df":1}}}},"l":{"docs":{},"df":0,"i":{"docs":{"3":{"tf":1.0}},"df":1}}},"r":{"docs":{},"df":0,"y":{"docs":{},"df":0,"t":{"docs":{},"df":0,"h":{"docs":{"1":{"tf":1.0},"17":{"tf":1.0},"4":{"tf":1.0}},"df":3}},"w":{"docs":{},"df":0,"h":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"0":{"tf":1.0}},"df":1}}}}}}},"i":{"docs":{},"df":0,"d":{"docs":{"10":{"tf":1.0}},"df":1}}},"x":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0},"12":{"tf":1.0},"17":{"tf":1.0},"3":{"tf":1.0},"4":{"tf":1.0}},"df":5,"l":{"docs":{},"df":0,"i":{"docs":{"0":{"tf":1.0},"11":{"tf":1.0},"16":{"tf":1.0},"17":{"tf":1.0},"21":{"tf":1.0},"3":{"tf":1.7320508075688772},"4":{"tf":1.0}},"df":7}}}},"m":{"docs":{},"df":0,"p":{"docs":{},"df":0,"l":{"docs":{"20":{"tf":1.0}},"df":1}}}},"i":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{"1":{"tf":1.0}},"df":1}},"t":{"docs":{"18":{"tf":1.0},"20":{"tf":1.4142135623730951}},"df":2}},"p":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"4":{"tf":1.0}},"df":1},"s":{"docs":{"17":{"tf":1.0}},"df":1}}},"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"8":{"tf":1.0}},"df":1}},"n":{"docs":{},"df":0,"s":{"docs":{"22":{"tf":1.0}},"df":1}}},"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"t":{"docs":{"21":{"tf":1.0},"5":{"tf":1.0}},"df":2}},"s":{"docs":{"18":{"tf":1.0}},"df":1}},"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"s":{"docs":{"0":{"tf":1.0}},"df":1}}}}},"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"n":{"docs":{"5":{"tf":1.0}},"df":1}}},"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{},"df":0,"o":{"docs":{},"df":0,"l":{"docs":{"12":{"tf":1.4142135623730951},"8":{"tf":1.4142135623730951}},"df":2}}}}}}}},"f":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"e":{"docs":{"11":{"tf":1.4142135623730951},"3":{"tf":1.4142135623730951}},"df":2},"t":{"docs":{"1":{"tf":1.0}},"df":1,"o":{"docs":{},"df":0,"r":{"docs":{"4":{"tf":1.0},"8":{"tf":1.0}},"df":2}}}},"i":{"docs":{},"df":0,"l":{"docs":{"20":{"tf":1.0}},"df":1,"u":{"docs":{},"df":0,"r":{"docs":{"18":{"tf":1.0},"20":{"tf":1.0}},"df":2}}}},"m":{"docs":{},"df":0,"i":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{"12":{"tf":1.0},"8":{"tf":1.0}},"df":2}}}},"r":{"docs":{"7":{"tf":1.0}},"df":1},"s":{"docs":{},"df":0,"t":{"docs":{"19":{"tf":1.0}},"df":1}}},"e":{"docs":{},"df":0,"w":{"docs":{"12":{"tf":1.0},"17":{"tf":1.0}},"df":2}},"i":{"docs":{},"df":0,"e":{"docs":{},"df":0,"l":{"docs":{},"df":0,"d":{"docs":{"8":{"tf":1.0}},"df":1}}},"l":{"docs":{},"df":0,"e":{"docs":{"20":{"tf":1.4142135623730951},"21":{"tf":1.0},"22":{"tf":1.4142135623730951}},"df":3}},"n":{"docs":{},"df":0,"e":{"docs":{"20":{"tf":1.0}},"df":1,"s":{"docs":{},"df":0,"t":{"docs":{"8":{"tf":1.0}},"df":1}}},"i":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.7320508075688772},"4":{"tf":1.0}},"df":2}}},"r":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{"1":{"tf":1.4142135623730951},"12":{"tf":1.0},"13":{"tf":1.0},"15":{"tf":1.4142135623730951},"16":{"tf":1.0},"19":{"tf":1.4142135623730951},"6":{"tf":1.0}},"df":7}}},"t":{"docs":{"0":{"tf":1.0},"12":{"tf":1.0},"15":{"tf":1.0},"17":{"tf":1.4142135623730951},"18":{"tf":1.0}},"df":5},"v":{"docs":{},"df":0,"e":{"docs":{"4":{"tf":1.0}},"df":1}},"x":{"docs":{"11":{"tf":1.0},"16":{"tf":1.4142135623730951}},"df":2}},"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"g":{"docs":{"20":{"tf":1.0},"5":{"tf":1.0}},"df":2},"t":{"docs":{"20":{"tf":1.0}},"df":1}},"i":{"docs":{},"df":0,"p":{"docs":{"3":{"tf":1.0}},"df":1}},"o":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{"21":{"tf":1.0}},"df":1}}},"u":{"docs":{},"df":0,"x":{"docs":{"16":{"tf":1.0}},"df":1}}},"n":{"docs":{"1":{"tf":1.0},"12":{"tf":1.0},"16":{"tf":1.0},"3":{"tf":1.0},"7":{"tf":1.0},"9":{"tf":1.0}},"df":6},"o":{"docs":{},"df":0,"l":{"docs":{},"df":0,"l":{"docs":{},"df":0,"o":{"docs":{},"df":0,"w":{"docs":{"0":{"tf":1.0}},"df":1}}}},"r":{"docs":{},"df":0,"m":{"docs":{"0":{"tf":1.0},"8":{"tf":1.4142135623730951}},"df":2,"a":{"docs":{},"df":0,"t":{"docs":{"21":{"tf":1.0}},"df":1}},"u":{"docs":{},"df":0,"l":{"docs":{},"df":0,"a":{"docs":{"17":{"tf":1.4142135623730951}},"df":1}}}}}},"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{"19":{"tf":1.0}},"df":1}},"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0}},"df":1}}}},"u":{"docs":{},"df":0,"l":{"docs":{},"df":0,"l":{"docs":{"9":{"tf":1.0}},"df":1}},"n":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{"11":{"tf":1.4142135623730951}},"df":1}}}}}}}},"g":{"docs":{"12":{"tf":1.7320508075688772}},"df":1,"a":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"4":{"tf":1.0}},"df":1}},"p":{"docs":{"0":{"tf":1.0}},"df":1}},"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"0":{"tf":1.0},"13":{"tf":1.4142135623730951},"15":{"tf":1.0},"18":{"tf":1.0},"4":{"tf":1.0}},"df":5}},"u":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"8":{"tf":1.0}},"df":1}}}},"o":{"docs":{},"df":0,"m":{"docs":{},"df":0,"e":{"docs":{},"df":0,"t":{"docs":{},"df":0,"r":{"docs":{"17":{"tf":1.0}},"df":1,"i":{"docs":{"1":{"tf":1.0}},"df":1}}}}}}},"h":{"docs":{},"df":0,"o":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{"3":{"tf":2.23606797749979}},"df":1}}}},"i":{"docs":{},"df":0,"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{"1":{"tf":1.0}},"df":1}}}},"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"d":{"docs":{"1":{"tf":1.0},"11":{"tf":1.0},"12":{"tf":1.4142135623730951},"13":{"tf":1.0},"16":{"tf":1.0},"17":{"tf":1.0},"3":{"tf":1.4142135623730951},"4":{"tf":1.4142135623730951},"7":{"tf":1.0},"8":{"tf":1.4142135623730951}},"df":10,"s":{"docs":{},"df":0,"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{"3":{"tf":1.0}},"df":1,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,"w":{"docs":{},"df":0,"(":{"docs":{},"df":0,"3":{"docs":{},"df":0,".":{"docs":{},"df":0,"0":{"docs":{"3":{"tf":1.0}},"df":1}}}}}}}}}}}}}}},"o":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"1":{"tf":1.0}},"df":1}}},"w":{"docs":{"0":{"tf":1.0},"10":{"tf":1.0}},"df":2}}},"u":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"d":{"docs":{"17":{"tf":1.0}},"df":1}}},"i":{"docs":{},"df":0,"d":{"docs":{"0":{"tf":1.4142135623730951}},"df":1}}}},"h":{"docs":{},"df":0,"_":{"docs":{},"df":0,"i":{"docs":{"3":{"tf":1.0}},"df":1},"x":{"docs":{"3":{"tf":1.0}},"df":1},"y":{"docs":{},"df":0,")":{"docs":{},"df":0,")":{"docs":{},"df":0,"/":{"docs":{},"df":0,"h":{"docs":{},"df":0,"_":{"docs":{},"df":0,"i":{"docs":{"3":{"tf":1.0}},"df":1}}}}}}}},"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"f":{"docs":{"0":{"tf":1.7320508075688772},"1":{"tf":1.7320508075688772},"10":{"tf":1.0},"19":{"tf":1.0},"4":{"tf":1.0},"7":{"tf":1.0},"8":{"tf":1.0}},"df":7},"v":{"docs":{"17":{"tf":1.0}},"df":1}},"s":{"docs":{},"df":0,"h":{"docs":{"22":{"tf":1.0}},"df":1}}},"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"t":{"docs":{},"df":0,"h":{"docs":{"16":{"tf":1.0}},"df":1}}}}},"i":{"docs":{},"df":0,"t":{"docs":{"22":{"tf":1.4142135623730951}},"df":1}},"o":{"docs":{},"df":0,"l":{"docs":{},"df":0,"d":{"docs":{"1":{"tf":1.0},"16":{"tf":1.0}},"df":2}}},"u":{"docs":{},"df":0,"g":{"docs":{"10":{"tf":1.0}},"df":1}}},"i":{"docs":{},"df":0,".":{"docs":{"12":{"tf":1.0}},"df":1},"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0},"15":{"tf":1.0},"16":{"tf":1.0},"22":{"tf":1.0}},"df":4}}},"x":{"docs":{"4":{"tf":1.0}},"df":1}},"m":{"docs":{},"df":0,"p":{"docs":{},"df":0,"o":{"docs":{},"df":0,"s":{"docs":{"3":{"tf":1.0}},"df":1}}}},"n":{"docs":{},"df":0,"c":{"docs":{},"df":0,"l":{"docs":{},"df":0,"u":{"docs":{},"df":0,"d":{"docs":{"0":{"tf":1.0}},"df":1}}}},"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"0":{"tf":1.4142135623730951},"1":{"tf":1.0},"10":{"tf":1.0},"14":{"tf":1.0},"15":{"tf":1.0},"18":{"tf":1.0}},"df":6}}}},"x":{"docs":{"4":{"tf":1.0}},"df":1}},"i":{"docs":{},"df":0,"c":{"docs":{"11":{"tf":1.4142135623730951}},"df":1}}},"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"a":{"docs":{"0":{"tf":1.0},"12":{"tf":1.0},"17":{"tf":1.0},"8":{"tf":1.4142135623730951}},"df":4}}}}},"f":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"1":{"tf":1.4142135623730951},"13":{"tf":1.0}},"df":2,"i":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0},"4":{"tf":1.0},"8":{"tf":1.0}},"df":3}}}}},"g":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"d":{"docs":{},"df":0,"i":{"docs":{"16":{"tf":1.0}},"df":1}}}}},"h":{"docs":{},"df":0,"o":{"docs":{},"df":0,"m":{"docs":{},"df":0,"o":{"docs":{},"df":0,"g":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{"16":{"tf":1.0}},"df":1}}}}}}},"s":{"docs":{},"df":0,"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"5":{"tf":1.0}},"df":1}}}},"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"d":{"docs":{"13":{"tf":1.0}},"df":1}}}}},"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{"1":{"tf":1.0},"9":{"tf":1.0}},"df":2}}},"n":{"docs":{"0":{"tf":1.0}},"df":1},"p":{"docs":{},"df":0,"o":{"docs":{},"df":0,"l":{"docs":{"11":{"tf":1.0}},"df":1}}},"r":{"docs":{},"df":0,"u":{"docs":{},"df":0,"p":{"docs":{},"df":0,"t":{"docs":{"22":{"tf":1.0}},"df":1}}}},"v":{"docs":{"1":{"tf":1.0}},"df":1}}},"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"d":{"docs":{},"df":0,"u":{"docs":{},"df":0,"c":{"docs":{"0":{"tf":1.0}},"df":1,"t":{"docs":{"0":{"tf":1.0}},"df":1}}}}}}},"v":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{"0":{"tf":1.0},"18":{"tf":1.0},"19":{"tf":1.0},"9":{"tf":1.0}},"df":4}}},"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"s":{"docs":{"4":{"tf":1.0}},"df":1}}},"o":{"docs":{},"df":0,"c":{"docs":{"19":{"tf":1.0}},"df":1},"l":{"docs":{},"df":0,"u":{"docs":{},"df":0,"t":{"docs":{"1":{"tf":1.0}},"df":1}}}}}},"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"8":{"tf":1.0}},"df":1}},"s":{"docs":{},"df":0,"e":{"docs":{},"df":0,"l":{"docs":{},"df":0,"f":{"docs":{"0":{"tf":1.4142135623730951},"1":{"tf":1.0},"12":{"tf":1.0}},"df":3}}}}}},"j":{"docs":{"3":{"tf":1.0},"4":{"tf":1.0}},"df":2,"o":{"docs":{},"df":0,"b":{"docs":{"19":{"tf":1.0},"22":{"tf":1.0}},"df":2}},"s":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{"21":{"tf":1.0}},"df":1}}}},"k":{"docs":{},"df":0,"e":{"docs":{},"df":0,"e":{"docs":{},"df":0,"p":{"docs":{"0":{"tf":1.0},"3":{"tf":1.0}},"df":2}},"r":{"docs":{},"df":0,"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,"l":{"docs":{"13":{"tf":1.0},"16":{"tf":1.4142135623730951}},"df":2}}}},"y":{"docs":{"20":{"tf":1.7320508075688772},"22":{"tf":1.0}},"df":2}},"n":{"docs":{},"df":0,"o":{"docs":{},"df":0,"w":{"docs":{"1":{"tf":1.0}},"df":1}}}},"l":{"docs":{"16":{"tf":2.0},"19":{"tf":1.0},"2":{"tf":1.4142135623730951},"3":{"tf":1.0},"4":{"tf":1.0}},"df":5,"a":{"docs":{},"df":0,"b":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{"0":{"tf":1.0}},"df":1}}}}}}}},"d":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"12":{"tf":1.0},"17":{"tf":1.0}},"df":2}}}},"p":{"docs":{},"df":0,"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"i":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{"0":{"tf":1.0}},"df":1}}}}}}},"r":{"docs":{},"df":0,"g":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"8":{"tf":1.0}},"df":1}}}},"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"1":{"tf":1.0}},"df":1}},"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{"11":{"tf":1.0}},"df":1}}}},"w":{"docs":{"12":{"tf":1.0}},"df":1},"y":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"0":{"tf":1.4142135623730951}},"df":1}},"o":{"docs":{},"df":0,"u":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.7320508075688772},"1":{"tf":2.23606797749979},"2":{"tf":1.0},"9":{"tf":1.0}},"df":4}}}}},"d":{"docs":{},"df":0,"l":{"docs":{"0":{"tf":1.0},"12":{"tf":1.0},"4":{"tf":1.0},"8":{"tf":1.0}},"df":4}},"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"d":{"docs":{"15":{"tf":1.0}},"df":1},"k":{"docs":{"3":{"tf":1.0}},"df":1}},"f":{"docs":{},"df":0,"t":{"docs":{"1":{"tf":1.0}},"df":1}},"n":{"docs":{},"df":0,"g":{"docs":{},"df":0,"t":{"docs":{},"df":0,"h":{"docs":{"0":{"tf":2.0},"10":{"tf":1.7320508075688772},"11":{"tf":1.0},"12":{"tf":1.0},"14":{"tf":1.0},"18":{"tf":2.0},"19":{"tf":2.0},"22":{"tf":1.0},"4":{"tf":1.0},"7":{"tf":1.0},"9":{"tf":1.4142135623730951}},"df":11}}}},"s":{"docs":{},"df":0,"s":{"docs":{"3":{"tf":1.0}},"df":1}},"t":{"docs":{"4":{"tf":1.0}},"df":1},"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"l":{"docs":{"12":{"tf":1.4142135623730951},"17":{"tf":1.0},"20":{"tf":1.0},"4":{"tf":1.4142135623730951},"7":{"tf":1.0}},"df":5}}}},"i":{"docs":{},"df":0,"b":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{"0":{"tf":1.0}},"df":1}}}}},"n":{"docs":{},"df":0,"e":{"docs":{"0":{"tf":1.4142135623730951},"18":{"tf":1.0},"20":{"tf":1.4142135623730951},"9":{"tf":1.0}},"df":4,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{"4":{"tf":1.0}},"df":1}}}}}},"s":{"docs":{},"df":0,"t":{"docs":{"21":{"tf":1.0},"5":{"tf":1.0}},"df":2}},"v":{"docs":{},"df":0,"e":{"docs":{"0":{"tf":1.0},"3":{"tf":1.4142135623730951}},"df":2}}},"o":{"docs":{},"df":0,"c":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{"10":{"tf":1.0}},"df":1}}},"g":{"docs":{"22":{"tf":1.0}},"df":1},"s":{"docs":{},"df":0,"e":{"docs":{"12":{"tf":1.4142135623730951}},"df":1}},"t":{"docs":{"1":{"tf":1.0}},"df":1},"w":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"12":{"tf":1.4142135623730951},"4":{"tf":1.0},"8":{"tf":1.0}},"df":3}}}}},"m":{"docs":{"1":{"tf":1.0},"4":{"tf":1.0}},"df":2,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"h":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{"3":{"tf":1.0},"9":{"tf":1.0}},"df":2}}}}}}},"i":{"docs":{},"df":0,"n":{"docs":{"1":{"tf":1.0},"12":{"tf":1.0},"16":{"tf":1.0},"3":{"tf":1.0},"7":{"tf":1.0},"9":{"tf":1.0}},"df":6}},"j":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{"4":{"tf":1.0}},"df":1}}},"k":{"docs":{},"df":0,"e":{"docs":{"4":{"tf":1.0}},"df":1}},"l":{"docs":{},"df":0,"f":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"m":{"docs":{"20":{"tf":1.0}},"df":1}}}}},"p":{"docs":{"1":{"tf":1.0}},"df":1},"r":{"docs":{},"df":0,"g":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"16":{"tf":1.0}},"df":1}}}},"s":{"docs":{},"df":0,"s":{"docs":{"16":{"tf":1.0}},"df":1}},"t":{"docs":{},"df":0,"c":{"docs":{},"df":0,"h":{"docs":{"16":{"tf":1.4142135623730951}},"df":1}},"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"x":{"docs":{"2":{"tf":1.0},"21":{"tf":1.0},"3":{"tf":1.0},"4":{"tf":1.0},"5":{"tf":1.0}},"df":5}}}}},"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"g":{"docs":{"10":{"tf":1.0}},"df":1}}}}},"s":{"docs":{},"df":0,"s":{"docs":{},"df":0,"a":{"docs":{},"df":0,"g":{"docs":{"20":{"tf":1.0}},"df":1}}}}},"i":{"docs":{},"df":0,"d":{"docs":{},"df":0,"p":{"docs":{},"df":0,"o":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"8":{"tf":1.0}},"df":1}}}}}},"s":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"c":{"docs":{},"df":0,"h":{"docs":{"16":{"tf":1.0}},"df":1}}}}},"s":{"docs":{"0":{"tf":1.0}},"df":1}},"x":{"docs":{"3":{"tf":1.0}},"df":1}},"o":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{"0":{"tf":1.4142135623730951},"13":{"tf":2.0},"15":{"tf":1.0},"16":{"tf":1.4142135623730951},"18":{"tf":1.4142135623730951},"3":{"tf":1.0},"4":{"tf":1.4142135623730951}},"df":7,"l":{"docs":{"1":{"tf":1.0}},"df":1}},"u":{"docs":{},"df":0,"l":{"docs":{"1":{"tf":1.4142135623730951},"10":{"tf":1.0},"14":{"tf":1.0},"2":{"tf":1.0},"6":{"tf":1.0}},"df":5}}},"n":{"docs":{},"df":0,"o":{"docs":{},"df":0,"t":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{"12":{"tf":1.4142135623730951}},"df":1}}}}},"v":{"docs":{},"df":0,"e":{"docs":{"22":{"tf":1.0}},"df":1}}},"u":{"docs":{},"df":0,"1":{"docs":{"16":{"tf":1.0}},"df":1},"l":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"p":{"docs":{},"df":0,"l":{"docs":{"13":{"tf":1.0}},"df":1}}}}}}},"n":{"docs":{"1":{"tf":2.0},"10":{"tf":1.0},"11":{"tf":1.0},"12":{"tf":1.0},"19":{"tf":1.4142135623730951},"22":{"tf":1.0}},"df":6,"*":{"docs":{},"df":0,"(":{"docs":{},"df":0,"2":{"docs":{},"df":0,"ℓ":{"docs":{},"df":0,")":{"docs":{},"df":0,"/":{"docs":{},"df":0,"2":{"docs":{"1":{"tf":1.4142135623730951}},"df":1}}}}}}},"/":{"docs":{},"df":0,"m":{"docs":{"22":{"tf":1.0}},"df":1}},"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{"0":{"tf":1.0},"10":{"tf":1.0}},"df":2}},"e":{"docs":{},"df":0,"d":{"docs":{"0":{"tf":1.0},"16":{"tf":1.0},"4":{"tf":1.0}},"df":3}},"i":{"docs":{},"df":0,"g":{"docs":{},"df":0,"h":{"docs":{},"df":0,"b":{"docs":{},"df":0,"o":{"docs":{},"df":0,"u":{"docs":{},"df":0,"r":{"docs":{"9":{"tf":1.0}},"df":1}}}}}}},"u":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"n":{"docs":{"0":{"tf":1.7320508075688772},"1":{"tf":1.0},"3":{"tf":1.0},"4":{"tf":1.0},"8":{"tf":1.4142135623730951}},"df":5}}}}},"w":{"docs":{"0":{"tf":1.4142135623730951},"10":{"tf":1.0}},"df":2,"b":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"n":{"docs":{"14":{"tf":1.0}},"df":1}}}}},"x":{"docs":{},"df":0,"t":{"docs":{"1":{"tf":1.0},"13":{"tf":1.0}},"df":2}}},"o":{"docs":{},"df":0,"n":{"docs":{"0":{"tf":1.0}},"df":1,"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{"17":{"tf":1.0}},"df":1}}}}}},"z":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{"13":{"tf":1.0},"18":{"tf":1.0}},"df":2}}}}},"r":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{"13":{"tf":1.0},"16":{"tf":1.0}},"df":2}}}}},"u":{"docs":{},"df":0,"m":{"docs":{"7":{"tf":1.4142135623730951},"9":{"tf":1.4142135623730951}},"df":2,"b":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"0":{"tf":1.4142135623730951},"1":{"tf":1.0},"15":{"tf":1.0},"7":{"tf":1.0}},"df":4}}},"e":{"docs":{},"df":0,"r":{"docs":{"0":{"tf":1.0},"20":{"tf":1.0},"7":{"tf":1.7320508075688772},"9":{"tf":1.4142135623730951}},"df":4,"i":{"docs":{},"df":0,"c":{"docs":{},"df":0,"s":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"f":{"docs":{},"df":0,"a":{"docs":{},"df":0,"u":{"docs":{},"df":0,"l":{"docs":{},"df":0,"t":{"docs":{"7":{"tf":1.0},"9":{"tf":1.0}},"df":2}}}}}}}}}}}}}}}},"x":{"docs":{"19":{"tf":1.0},"7":{"tf":1.0}},"df":2},"y":{"docs":{"19":{"tf":1.0},"20":{"tf":1.0},"4":{"tf":1.4142135623730951},"7":{"tf":1.7320508075688772},"9":{"tf":1.0}},"df":5}},"o":{"docs":{"0":{"tf":1.0},"10":{"tf":1.0},"14":{"tf":1.0},"17":{"tf":1.0}},"df":4,"b":{"docs":{},"df":0,"e":{"docs":{},"df":0,"y":{"docs":{"1":{"tf":1.0},"14":{"tf":1.0}},"df":2}},"v":{"docs":{},"df":0,"i":{"docs":{},"df":0,"o":{"docs":{},"df":0,"u":{"docs":{"3":{"tf":1.0}},"df":1}}}}},"d":{"docs":{},"df":0,"d":{"docs":{"1":{"tf":1.4142135623730951},"16":{"tf":1.4142135623730951}},"df":2}},"f":{"docs":{},"df":0,"f":{"docs":{},"df":0,"s":{"docs":{},"df":0,"e":{"docs":{},"df":0,"t":{"docs":{"11":{"tf":1.0},"12":{"tf":1.0},"4":{"tf":1.0}},"df":3}}}}},"n":{"docs":{"0":{"tf":1.4142135623730951},"1":{"tf":1.4142135623730951},"11":{"tf":1.4142135623730951},"18":{"tf":1.0},"4":{"tf":1.0},"8":{"tf":1.0},"9":{"tf":1.4142135623730951}},"df":7,"c":{"docs":{"8":{"tf":1.4142135623730951}},"df":1}},"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{"0":{"tf":1.0}},"df":1},"r":{"docs":{"0":{"tf":1.4142135623730951},"1":{"tf":2.0},"11":{"tf":1.0},"12":{"tf":1.0},"13":{"tf":1.4142135623730951},"16":{"tf":1.4142135623730951},"21":{"tf":1.0},"3":{"tf":1.0},"5":{"tf":1.4142135623730951},"8":{"tf":1.4142135623730951}},"df":10}}},"r":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"16":{"tf":1.0},"17":{"tf":1.4142135623730951},"3":{"tf":1.0}},"df":3}}},"i":{"docs":{},"df":0,"g":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"16":{"tf":1.4142135623730951}},"df":1}}}}},"u":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0},"20":{"tf":1.0}},"df":2,">":{"docs":{},"df":0,".":{"docs":{},"df":0,"c":{"docs":{},"df":0,"s":{"docs":{},"df":0,"v":{"docs":{"21":{"tf":1.0}},"df":1}}},"j":{"docs":{},"df":0,"s":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{"21":{"tf":1.0}},"df":1}}}}}},"g":{"docs":{},"df":0,"o":{"docs":{"13":{"tf":1.0}},"df":1}},"p":{"docs":{},"df":0,"u":{"docs":{},"df":0,"t":{"docs":{"21":{"tf":1.4142135623730951},"22":{"tf":1.0}},"df":2}}}}},"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"12":{"tf":1.0},"16":{"tf":1.4142135623730951},"18":{"tf":1.0},"8":{"tf":1.0},"9":{"tf":1.0}},"df":5,"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{"22":{"tf":1.0}},"df":1}}},"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"d":{"docs":{"20":{"tf":1.0}},"df":1,"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{"20":{"tf":1.0}},"df":1}}}}}}}}}},"p":{"docs":{"1":{"tf":1.0}},"df":1,"a":{"docs":{},"df":0,"i":{"docs":{},"df":0,"r":{"docs":{"8":{"tf":1.0}},"df":1}},"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"l":{"docs":{"18":{"tf":1.0},"22":{"tf":1.0}},"df":2}}}},"m":{"docs":{},"df":0,"e":{"docs":{},"df":0,"t":{"docs":{"20":{"tf":1.0},"22":{"tf":1.0}},"df":2,"r":{"docs":{"0":{"tf":1.0}},"df":1}}}}},"i":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{"1":{"tf":1.4142135623730951},"13":{"tf":1.0},"8":{"tf":1.0}},"df":3},"y":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{"1":{"tf":1.4142135623730951}},"df":1}}}}}},"t":{"docs":{"12":{"tf":1.0}},"df":1,"i":{"docs":{},"df":0,"t":{"docs":{"1":{"tf":1.0}},"df":1}}}},"s":{"docs":{},"df":0,"s":{"docs":{"0":{"tf":1.0}},"df":1,"/":{"docs":{},"df":0,"f":{"docs":{},"df":0,"a":{"docs":{},"df":0,"i":{"docs":{},"df":0,"l":{"docs":{"9":{"tf":1.0}},"df":1}}}}}},"t":{"docs":{"14":{"tf":1.0}},"df":1}},"t":{"docs":{},"df":0,"h":{"docs":{"21":{"tf":1.0},"5":{"tf":1.0}},"df":2}},"y":{"docs":{},"df":0,"o":{"docs":{},"df":0,"f":{"docs":{},"df":0,"f":{"docs":{"3":{"tf":1.0}},"df":1}}}}},"e":{"docs":{},"df":0,"e":{"docs":{},"df":0,"l":{"docs":{"10":{"tf":1.0}},"df":1}},"r":{"docs":{"22":{"tf":1.0},"9":{"tf":1.0}},"df":2,"c":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"17":{"tf":1.0}},"df":1}}}},"t":{"docs":{},"df":0,"u":{"docs":{},"df":0,"r":{"docs":{},"df":0,"b":{"docs":{"0":{"tf":1.0},"13":{"tf":1.0},"14":{"tf":1.0},"17":{"tf":1.0}},"df":4}}}}}},"h":{"docs":{},"df":0,"y":{"docs":{},"df":0,"s":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{"6":{"tf":1.0}},"df":1}}}}},"i":{"docs":{"16":{"tf":1.0}},"df":1,"n":{"docs":{"1":{"tf":1.0}},"df":1},"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"0":{"tf":1.0},"13":{"tf":1.0},"15":{"tf":1.0},"18":{"tf":1.0}},"df":4}}}}}},"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{"0":{"tf":1.0}},"df":1}}},"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"u":{"docs":{"16":{"tf":1.4142135623730951}},"df":1}}}}}},"o":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"10":{"tf":1.0},"21":{"tf":1.0},"4":{"tf":1.0}},"df":3}}},"o":{"docs":{},"df":0,"l":{"docs":{"22":{"tf":1.0}},"df":1}},"s":{"docs":{},"df":0,"s":{"docs":{},"df":0,"i":{"docs":{},"df":0,"b":{"docs":{},"df":0,"l":{"docs":{"4":{"tf":1.0}},"df":1}}}}},"w":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"9":{"tf":1.0}},"df":1}}}},"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"d":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{"12":{"tf":1.7320508075688772}},"df":1}}},"s":{"docs":{},"df":0,"c":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"b":{"docs":{"4":{"tf":1.0}},"df":1}}}}}},"i":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{"12":{"tf":1.0}},"df":1}}}},"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,"l":{"docs":{},"df":0,"n":{"docs":{},"df":0,"!":{"docs":{},"df":0,"(":{"docs":{},"df":0,"\\"":{"docs":{},"df":0,"m":{"docs":{"7":{"tf":1.0}},"df":1}}}}}}}}},"o":{"docs":{},"df":0,"b":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"m":{"docs":{"10":{"tf":1.0},"16":{"tf":1.4142135623730951},"17":{"tf":1.0},"4":{"tf":1.0}},"df":4}}}},"d":{"docs":{},"df":0,"u":{"docs":{},"df":0,"c":{"docs":{"22":{"tf":1.0}},"df":1,"t":{"docs":{"12":{"tf":1.0},"17":{"tf":1.0}},"df":2}}}},"f":{"docs":{},"df":0,"i":{"docs":{},"df":0,"l":{"docs":{"1":{"tf":1.0},"13":{"tf":1.0},"16":{"tf":1.4142135623730951},"3":{"tf":1.0}},"df":4}}},"v":{"docs":{},"df":0,"i":{"docs":{},"df":0,"d":{"docs":{"0":{"tf":1.0}},"df":1}}}}},"u":{"docs":{},"df":0,"r":{"docs":{},"df":0,"p":{"docs":{},"df":0,"o":{"docs":{},"df":0,"s":{"docs":{"18":{"tf":1.0}},"df":1}}}}}},"q":{"docs":{},"df":0,"u":{"docs":{},"df":0,"a":{"docs":{},"df":0,"d":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{"17":{"tf":1.0}},"df":1}}}},"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{"13":{"tf":1.0}},"df":1}}}},"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{"0":{"tf":1.0},"1":{"tf":1.0}},"df":2}}}}}},"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{"6":{"tf":1.0}},"df":1}}}}}},"i":{"docs":{},"df":0,"c":{"docs":{},"df":0,"k":{"docs":{"19":{"tf":1.0},"7":{"tf":1.0}},"df":2}}}}},"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"g":{"docs":{"18":{"tf":1.0},"20":{"tf":1.0}},"df":2}},"t":{"docs":{},"df":0,"e":{"docs":{"22":{"tf":1.0}},"df":1},"i":{"docs":{},"df":0,"o":{"docs":{"4":{"tf":1.0}},"df":1}}}},"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"d":{"docs":{"8":{"tf":1.0}},"df":1}}}},"f":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"7":{"tf":1.0},"8":{"tf":1.0}},"df":2}},"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0},"3":{"tf":1.4142135623730951}},"df":2}}}},"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"m":{"docs":{},"df":0,"u":{"docs":{},"df":0,"l":{"docs":{"16":{"tf":1.0}},"df":1}}}}}},"g":{"docs":{},"df":0,"i":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{"16":{"tf":1.0}},"df":1}}}},"l":{"docs":{"11":{"tf":1.0},"12":{"tf":1.0},"15":{"tf":1.0}},"df":3,"i":{"docs":{},"df":0,"a":{"docs":{},"df":0,"b":{"docs":{},"df":0,"l":{"docs":{"6":{"tf":1.0}},"df":1}}}}},"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"4":{"tf":1.0}},"df":1,"d":{"docs":{"17":{"tf":1.4142135623730951}},"df":1}}}}},"n":{"docs":{},"df":0,"a":{"docs":{},"df":0,"m":{"docs":{"22":{"tf":1.0}},"df":1}}},"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{"12":{"tf":1.0},"9":{"tf":1.0}},"df":2}}},"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0},"12":{"tf":1.0},"15":{"tf":1.0},"16":{"tf":1.4142135623730951},"7":{"tf":1.0},"8":{"tf":1.0},"9":{"tf":1.4142135623730951}},"df":7,".":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,"_":{"docs":{},"df":0,"s":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{},"df":0,"w":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{},"df":0,"h":{"docs":{},"df":0,"_":{"docs":{},"df":0,"o":{"docs":{},"df":0,"k":{"docs":{"9":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}},"e":{"docs":{},"df":0,"i":{"docs":{},"df":0,"g":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"v":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"u":{"docs":{"7":{"tf":1.0}},"df":1}}}}}}}}}}}}}},"s":{"docs":{},"df":0,"i":{"docs":{},"df":0,"d":{"docs":{},"df":0,"u":{"docs":{"13":{"tf":1.0},"16":{"tf":1.0},"8":{"tf":1.0}},"df":3}}},"o":{"docs":{},"df":0,"l":{"docs":{},"df":0,"u":{"docs":{},"df":0,"t":{"docs":{"11":{"tf":1.0},"7":{"tf":1.0}},"df":2}}}},"u":{"docs":{},"df":0,"l":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0},"21":{"tf":1.0},"22":{"tf":1.4142135623730951}},"df":3}},"m":{"docs":{"19":{"tf":1.0},"22":{"tf":1.0}},"df":2}}},"u":{"docs":{},"df":0,"s":{"docs":{"22":{"tf":1.0}},"df":1}}},"i":{"docs":{},"df":0,"c":{"docs":{},"df":0,"h":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"d":{"docs":{},"df":0,"s":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{"12":{"tf":1.0},"8":{"tf":1.0}},"df":2}}}}}}}},"g":{"docs":{},"df":0,"h":{"docs":{},"df":0,"t":{"docs":{"1":{"tf":1.0}},"df":1}}}},"o":{"docs":{},"df":0,"o":{"docs":{},"df":0,"t":{"docs":{"12":{"tf":1.0}},"df":1}},"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"21":{"tf":1.0},"3":{"tf":1.0}},"df":2}}},"w":{"docs":{"21":{"tf":1.0},"5":{"tf":1.0}},"df":2}},"u":{"docs":{},"df":0,"n":{"docs":{"18":{"tf":1.0},"22":{"tf":1.4142135623730951},"9":{"tf":1.0}},"df":3,".":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"f":{"docs":{"20":{"tf":1.4142135623730951}},"df":1}}}}},"n":{"docs":{},"df":0,"a":{"docs":{},"df":0,"b":{"docs":{},"df":0,"l":{"docs":{"0":{"tf":1.0}},"df":1}}}}}}},"s":{"docs":{},"df":0,"a":{"docs":{},"df":0,"m":{"docs":{},"df":0,"e":{"docs":{"15":{"tf":1.0},"22":{"tf":1.0},"8":{"tf":1.0},"9":{"tf":1.0}},"df":4},"p":{"docs":{},"df":0,"l":{"docs":{"11":{"tf":1.0},"3":{"tf":1.0}},"df":2}}},"n":{"docs":{},"df":0,"d":{"docs":{},"df":0,"w":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{},"df":0,"h":{"docs":{"1":{"tf":1.0},"9":{"tf":1.0}},"df":2}}}}}},"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"s":{"docs":{},"df":0,"f":{"docs":{},"df":0,"i":{"docs":{"4":{"tf":1.0}},"df":1}}}}}},"c":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{"17":{"tf":1.0},"4":{"tf":1.0}},"df":2}}},"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{"13":{"tf":1.0},"8":{"tf":1.0}},"df":2}}}},"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"16":{"tf":1.0},"3":{"tf":1.4142135623730951}},"df":2}}},"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{"1":{"tf":1.4142135623730951},"16":{"tf":1.0}},"df":2}}}}},"e":{"docs":{},"df":0,"d":{"docs":{"13":{"tf":1.0},"22":{"tf":1.0}},"df":2}},"r":{"docs":{},"df":0,"i":{"docs":{"16":{"tf":1.0}},"df":1}},"t":{"docs":{"10":{"tf":1.0},"22":{"tf":1.4142135623730951},"9":{"tf":1.0}},"df":3},"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"0":{"tf":1.0}},"df":1}}}},"h":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"l":{"docs":{},"df":0,"o":{"docs":{},"df":0,"w":{"docs":{"12":{"tf":1.0}},"df":1}}}}},"i":{"docs":{},"df":0,"f":{"docs":{},"df":0,"t":{"docs":{"4":{"tf":1.7320508075688772}},"df":1}}},"u":{"docs":{},"df":0,"t":{"docs":{"16":{"tf":1.0}},"df":1}}},"i":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{"0":{"tf":1.0},"1":{"tf":1.4142135623730951},"8":{"tf":1.0},"9":{"tf":1.0}},"df":4}},"g":{"docs":{},"df":0,"n":{"docs":{"11":{"tf":1.0},"3":{"tf":1.0},"8":{"tf":1.0}},"df":3,"i":{"docs":{},"df":0,"f":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{"21":{"tf":1.0}},"df":1}}}}}},"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0},"8":{"tf":1.0}},"df":2}}}},"n":{"docs":{},"df":0,"(":{"docs":{},"df":0,"√":{"docs":{},"df":0,"e":{"docs":{},"df":0,"_":{"docs":{},"df":0,"m":{"docs":{"3":{"tf":1.0}},"df":1}}}}},"g":{"docs":{},"df":0,"u":{"docs":{},"df":0,"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{"15":{"tf":1.0}},"df":1}}}}}},"t":{"docs":{"1":{"tf":1.0},"10":{"tf":1.0},"6":{"tf":1.0},"9":{"tf":1.0}},"df":4},"x":{"docs":{"18":{"tf":1.0}},"df":1},"z":{"docs":{},"df":0,"e":{"docs":{"22":{"tf":1.0}},"df":1}}},"k":{"docs":{},"df":0,"i":{"docs":{},"df":0,"p":{"docs":{"8":{"tf":1.0}},"df":1}}},"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"l":{"docs":{"4":{"tf":1.0}},"df":1,"e":{"docs":{},"df":0,"r":{"docs":{"8":{"tf":1.0}},"df":1}}}}},"o":{"docs":{},"df":0,"o":{"docs":{},"df":0,"t":{"docs":{},"df":0,"h":{"docs":{"11":{"tf":1.4142135623730951}},"df":1,"l":{"docs":{},"df":0,"i":{"docs":{"16":{"tf":1.0}},"df":1}}}}}}},"o":{"docs":{},"df":0,"l":{"docs":{},"df":0,"u":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0},"13":{"tf":1.0}},"df":2}},"v":{"docs":{"16":{"tf":1.4142135623730951},"17":{"tf":1.0}},"df":2,"a":{"docs":{},"df":0,"b":{"docs":{},"df":0,"l":{"docs":{"0":{"tf":1.0},"16":{"tf":1.0}},"df":2}}},"e":{"docs":{},"df":0,"r":{"docs":{"20":{"tf":1.0},"8":{"tf":1.0}},"df":2}}}}},"p":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{"16":{"tf":1.0}},"df":1},"r":{"docs":{},"df":0,"s":{"docs":{"2":{"tf":1.0}},"df":1}}},"e":{"docs":{},"df":0,"c":{"docs":{"1":{"tf":1.0},"3":{"tf":1.0},"7":{"tf":1.0}},"df":3,".":{"docs":{},"df":0,"b":{"docs":{},"df":0,"o":{"docs":{},"df":0,"t":{"docs":{},"df":0,"t":{"docs":{},"df":0,"o":{"docs":{},"df":0,"m":{"docs":{},"df":0,"_":{"docs":{},"df":0,"d":{"docs":{},"df":0,"i":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{},"df":0,"h":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"t":{"docs":{},"df":0,"(":{"docs":{},"df":0,"0":{"docs":{},"df":0,".":{"docs":{},"df":0,"0":{"docs":{"1":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}},"t":{"docs":{},"df":0,"o":{"docs":{},"df":0,"p":{"docs":{},"df":0,"_":{"docs":{},"df":0,"d":{"docs":{},"df":0,"i":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{},"df":0,"h":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"t":{"docs":{},"df":0,"(":{"docs":{},"df":0,"0":{"docs":{},"df":0,".":{"docs":{},"df":0,"0":{"docs":{"1":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}},"t":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{"18":{"tf":1.0},"6":{"tf":1.0}},"df":2,"l":{"docs":{"1":{"tf":1.0}},"df":1}},"u":{"docs":{},"df":0,"m":{"docs":{"0":{"tf":1.4142135623730951},"1":{"tf":1.0},"10":{"tf":1.0},"18":{"tf":1.4142135623730951},"19":{"tf":1.4142135623730951},"20":{"tf":1.4142135623730951},"6":{"tf":1.0},"9":{"tf":1.4142135623730951}},"df":8}}}}}},"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{"1":{"tf":1.0}},"df":1}}}},"q":{"docs":{},"df":0,"u":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{"12":{"tf":1.0},"17":{"tf":1.0}},"df":2}}}},"t":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"t":{"docs":{"19":{"tf":1.0},"7":{"tf":1.0}},"df":2}},"t":{"docs":{},"df":0,"e":{"docs":{"1":{"tf":1.4142135623730951}},"df":1}}},"d":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"f":{"docs":{},"df":0,"6":{"docs":{},"df":0,"4":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{},"df":0,"s":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"p":{"docs":{},"df":0,"i":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"a":{"docs":{},"df":0,"b":{"docs":{"16":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}},"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"c":{"docs":{},"df":0,"i":{"docs":{},"df":0,"l":{"docs":{"4":{"tf":1.0}},"df":1}}}},"p":{"docs":{"11":{"tf":1.0},"19":{"tf":1.0},"4":{"tf":1.0}},"df":3}},"o":{"docs":{},"df":0,"p":{"docs":{"22":{"tf":1.0}},"df":1},"r":{"docs":{},"df":0,"e":{"docs":{"22":{"tf":1.0}},"df":1}}},"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"20":{"tf":1.0}},"df":1}},"p":{"docs":{"0":{"tf":1.4142135623730951},"1":{"tf":1.4142135623730951},"19":{"tf":1.0},"2":{"tf":1.0},"4":{"tf":1.7320508075688772},"8":{"tf":1.0}},"df":6}},"u":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{},"df":0,"u":{"docs":{},"df":0,"r":{"docs":{"1":{"tf":1.0}},"df":1}}}}}},"u":{"docs":{},"df":0,"d":{"docs":{},"df":0,"i":{"docs":{"0":{"tf":1.0}},"df":1}}}},"u":{"docs":{},"df":0,"b":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"m":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"18":{"tf":1.0},"9":{"tf":1.0}},"df":2}}}}}}},"t":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{"11":{"tf":1.0}},"df":1}}}}}},"c":{"docs":{},"df":0,"c":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"s":{"docs":{"20":{"tf":1.0}},"df":1}}}}},"i":{"docs":{},"df":0,"t":{"docs":{"18":{"tf":1.0},"19":{"tf":1.0},"8":{"tf":1.0}},"df":3}},"r":{"docs":{},"df":0,"v":{"docs":{},"df":0,"i":{"docs":{},"df":0,"v":{"docs":{"1":{"tf":1.0}},"df":1}}}}},"w":{"docs":{},"df":0,"e":{"docs":{},"df":0,"e":{"docs":{},"df":0,"p":{"docs":{"0":{"tf":1.0},"15":{"tf":1.0},"17":{"tf":1.4142135623730951},"18":{"tf":1.4142135623730951},"19":{"tf":1.4142135623730951},"22":{"tf":1.7320508075688772}},"df":6}}},"i":{"docs":{},"df":0,"t":{"docs":{},"df":0,"c":{"docs":{},"df":0,"h":{"docs":{"0":{"tf":1.0}},"df":1}}}}},"y":{"docs":{},"df":0,"m":{"docs":{},"df":0,"m":{"docs":{},"df":0,"e":{"docs":{},"df":0,"t":{"docs":{},"df":0,"r":{"docs":{"0":{"tf":1.4142135623730951},"2":{"tf":1.0},"3":{"tf":1.4142135623730951}},"df":3,"i":{"docs":{"1":{"tf":1.4142135623730951}},"df":1}}}}}},"n":{"docs":{},"df":0,"c":{"docs":{"0":{"tf":1.0}},"df":1}}}},"t":{"docs":{"16":{"tf":1.0}},"df":1,"a":{"docs":{},"df":0,"g":{"docs":{"11":{"tf":1.0}},"df":1}},"e":{"docs":{},"df":0,"m":{"docs":{},"df":0,"p":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{"22":{"tf":1.0}},"df":1}}}}}}},"n":{"docs":{},"df":0,"d":{"docs":{"13":{"tf":1.0}},"df":1}},"r":{"docs":{},"df":0,"m":{"docs":{"0":{"tf":1.0},"16":{"tf":1.4142135623730951},"17":{"tf":1.0}},"df":3}},"s":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0}},"df":1}}},"h":{"docs":{"10":{"tf":1.0},"11":{"tf":1.0}},"df":2,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"f":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{"11":{"tf":1.0}},"df":1}}}}}},"i":{"docs":{},"df":0,"r":{"docs":{},"df":0,"d":{"docs":{"15":{"tf":1.0}},"df":1}}},"o":{"docs":{},"df":0,"u":{"docs":{},"df":0,"s":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"12":{"tf":1.0}},"df":1}}}}}},"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"d":{"docs":{"22":{"tf":1.0}},"df":1}},"e":{"docs":{"16":{"tf":1.0},"4":{"tf":1.0}},"df":2},"s":{"docs":{},"df":0,"h":{"docs":{},"df":0,"o":{"docs":{},"df":0,"l":{"docs":{},"df":0,"d":{"docs":{"0":{"tf":2.0},"1":{"tf":2.0},"10":{"tf":1.0},"11":{"tf":1.4142135623730951},"13":{"tf":1.7320508075688772},"15":{"tf":1.0},"18":{"tf":1.7320508075688772},"3":{"tf":1.4142135623730951},"4":{"tf":1.4142135623730951},"6":{"tf":1.0}},"df":10,"_":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"g":{"docs":{},"df":0,"y":{"docs":{},"df":0,"(":{"docs":{},"df":0,"1":{"docs":{"1":{"tf":1.0}},"df":1}}}}}}}}}}}}}}},"o":{"docs":{},"df":0,"u":{"docs":{},"df":0,"g":{"docs":{},"df":0,"h":{"docs":{"13":{"tf":1.0},"15":{"tf":1.0},"18":{"tf":1.0},"19":{"tf":1.0},"3":{"tf":1.0}},"df":5}}}}}},"i":{"docs":{},"df":0,"m":{"docs":{},"df":0,"e":{"docs":{"0":{"tf":1.0}},"df":1}}},"o":{"docs":{},"df":0,"g":{"docs":{},"df":0,"e":{"docs":{},"df":0,"t":{"docs":{},"df":0,"h":{"docs":{"8":{"tf":1.0}},"df":1}}}},"o":{"docs":{},"df":0,"l":{"docs":{"5":{"tf":1.0}},"df":1}},"p":{"docs":{"0":{"tf":1.0},"1":{"tf":1.4142135623730951}},"df":2}},"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"e":{"docs":{"16":{"tf":1.4142135623730951},"4":{"tf":1.0}},"df":2}},"n":{"docs":{},"df":0,"s":{"docs":{},"df":0,"p":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{"0":{"tf":1.0},"11":{"tf":1.4142135623730951},"12":{"tf":1.0},"13":{"tf":1.0},"16":{"tf":1.0},"17":{"tf":1.0},"4":{"tf":1.4142135623730951}},"df":7}},"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"t":{"docs":{"16":{"tf":1.0}},"df":1}}}},"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"s":{"docs":{"0":{"tf":1.0},"1":{"tf":2.0},"11":{"tf":1.0},"13":{"tf":1.0},"3":{"tf":1.7320508075688772},"4":{"tf":1.0},"7":{"tf":1.0}},"df":7}}}}}}},"i":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{"17":{"tf":1.0}},"df":1}},"p":{"docs":{"21":{"tf":1.0}},"df":1}},"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"c":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0},"10":{"tf":1.0},"12":{"tf":1.0},"2":{"tf":1.0},"4":{"tf":1.4142135623730951},"7":{"tf":1.0},"8":{"tf":1.7320508075688772}},"df":7}}}},"s":{"docs":{},"df":0,"t":{"docs":{"17":{"tf":1.0}},"df":1}}}},"u":{"docs":{},"df":0,"r":{"docs":{},"df":0,"n":{"docs":{"0":{"tf":1.4142135623730951},"1":{"tf":2.0},"2":{"tf":1.0},"8":{"tf":1.0}},"df":4}}},"w":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{},"df":0,"e":{"docs":{"8":{"tf":1.0}},"df":1}},"s":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.4142135623730951},"1":{"tf":2.23606797749979},"19":{"tf":1.0},"9":{"tf":1.4142135623730951}},"df":4,"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"p":{"docs":{"0":{"tf":1.0},"18":{"tf":1.0},"19":{"tf":2.23606797749979},"20":{"tf":1.4142135623730951},"22":{"tf":1.0}},"df":5,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"c":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{},"df":0,"y":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"{":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,"_":{"docs":{},"df":0,"b":{"docs":{},"df":0,"e":{"docs":{},"df":0,"l":{"docs":{},"df":0,"o":{"docs":{},"df":0,"w":{"docs":{"12":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}}}},"d":{"docs":{},"df":0,"i":{"docs":{},"df":0,"s":{"docs":{},"df":0,"c":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"z":{"docs":{},"df":0,"e":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"{":{"docs":{},"df":0,"a":{"docs":{},"df":0,"s":{"docs":{},"df":0,"s":{"docs":{},"df":0,"e":{"docs":{},"df":0,"m":{"docs":{},"df":0,"b":{"docs":{},"df":0,"l":{"docs":{"3":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}},"m":{"docs":{},"df":0,"o":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"l":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"v":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{"12":{"tf":1.0}},"df":1}}}},"w":{"docs":{},"df":0,"a":{"docs":{},"df":0,"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"g":{"docs":{},"df":0,"u":{"docs":{},"df":0,"i":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{"3":{"tf":1.0},"7":{"tf":1.0}},"df":2}}}}}}}}}}}}},"{":{"docs":{},"df":0,"t":{"docs":{},"df":0,"h":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"h":{"docs":{},"df":0,"o":{"docs":{},"df":0,"l":{"docs":{},"df":0,"d":{"docs":{},"df":0,"_":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"g":{"docs":{},"df":0,"i":{"docs":{"1":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}}},"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"t":{"docs":{},"df":0,"u":{"docs":{},"df":0,"r":{"docs":{},"df":0,"b":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"{":{"docs":{},"df":0,"m":{"docs":{},"df":0,"u":{"docs":{},"df":0,"1":{"docs":{},"df":0,"_":{"docs":{},"df":0,"f":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"m":{"docs":{},"df":0,"_":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"p":{"docs":{},"df":0,"h":{"docs":{},"df":0,"a":{"docs":{"16":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}}}}}}}},"s":{"docs":{},"df":0,"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{},"df":0,"r":{"docs":{},"df":0,"u":{"docs":{},"df":0,"m":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"{":{"docs":{},"df":0,"d":{"docs":{},"df":0,"i":{"docs":{},"df":0,"s":{"docs":{},"df":0,"c":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"_":{"docs":{},"df":0,"s":{"docs":{},"df":0,"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{},"df":0,"r":{"docs":{},"df":0,"u":{"docs":{},"df":0,"m":{"docs":{"7":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}},"v":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"d":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"_":{"docs":{},"df":0,"b":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"k":{"docs":{},"df":0,"e":{"docs":{},"df":0,"t":{"docs":{"9":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}}}}}}}},"_":{"docs":{},"df":0,"c":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"h":{"docs":{},"df":0,"e":{"docs":{},"df":0,"_":{"docs":{},"df":0,"d":{"docs":{},"df":0,"i":{"docs":{},"df":0,"r":{"docs":{"22":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}},"o":{"docs":{"0":{"tf":1.7320508075688772},"1":{"tf":1.4142135623730951},"10":{"tf":1.0},"12":{"tf":1.0},"14":{"tf":1.0},"16":{"tf":1.0},"18":{"tf":1.0},"4":{"tf":1.4142135623730951},"8":{"tf":1.0},"9":{"tf":1.0}},"df":10}},"y":{"docs":{},"df":0,"p":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{"19":{"tf":1.0}},"df":1}}}}},"u":{"docs":{"3":{"tf":1.4142135623730951}},"df":1,"n":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"0":{"tf":1.0},"17":{"tf":1.0},"8":{"tf":1.0}},"df":3}}},"k":{"docs":{},"df":0,"n":{"docs":{},"df":0,"o":{"docs":{},"df":0,"w":{"docs":{},"df":0,"n":{"docs":{"20":{"tf":1.0},"3":{"tf":1.4142135623730951}},"df":2}}}}}},"p":{"docs":{"3":{"tf":1.0},"4":{"tf":1.0}},"df":2,"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"4":{"tf":1.0},"8":{"tf":1.0}},"df":2}}}},"s":{"docs":{"1":{"tf":1.0},"12":{"tf":1.4142135623730951},"16":{"tf":1.0},"17":{"tf":1.0},"19":{"tf":1.0},"3":{"tf":1.4142135623730951},"4":{"tf":1.0},"7":{"tf":1.4142135623730951},"8":{"tf":1.0},"9":{"tf":1.0}},"df":10}},"v":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"d":{"docs":{"0":{"tf":1.0},"1":{"tf":1.0},"18":{"tf":1.0},"19":{"tf":1.0},"20":{"tf":1.0},"8":{"tf":1.0},"9":{"tf":1.4142135623730951}},"df":7,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"_":{"docs":{},"df":0,"b":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"k":{"docs":{},"df":0,"e":{"docs":{},"df":0,"t":{"docs":{"9":{"tf":1.0}},"df":1,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"g":{"docs":{},"df":0,"(":{"docs":{},"df":0,"1":{"docs":{},"df":0,".":{"docs":{},"df":0,"0":{"docs":{"9":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}},"u":{"docs":{"0":{"tf":1.0},"15":{"tf":1.0},"17":{"tf":1.0},"20":{"tf":1.4142135623730951},"21":{"tf":1.0},"5":{"tf":1.0}},"df":6}},"n":{"docs":{},"df":0,"i":{"docs":{},"df":0,"s":{"docs":{},"df":0,"h":{"docs":{"16":{"tf":1.0}},"df":1}}}},"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"a":{"docs":{},"df":0,"b":{"docs":{},"df":0,"l":{"docs":{"22":{"tf":1.0}},"df":1}},"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"t":{"docs":{},"df":0,"w":{"docs":{},"df":0,"i":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{"12":{"tf":1.4142135623730951}},"df":1}}}}}}}}}}}}},"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{"13":{"tf":1.0}},"df":1}}}},"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"f":{"docs":{},"df":0,"i":{"docs":{"1":{"tf":1.0}},"df":1}}},"s":{"docs":{},"df":0,"i":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{"22":{"tf":1.0}},"df":1}}}}}}},"w":{"docs":{},"df":0,"a":{"docs":{},"df":0,"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"g":{"docs":{},"df":0,"u":{"docs":{},"df":0,"i":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{"1":{"tf":1.4142135623730951}},"df":1,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"t":{"docs":{},"df":0,"w":{"docs":{},"df":0,"i":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"d":{"docs":{},"df":0,"(":{"docs":{},"df":0,"1":{"docs":{},"df":0,".":{"docs":{},"df":0,"0":{"docs":{"1":{"tf":1.0},"3":{"tf":1.0},"7":{"tf":1.0}},"df":3}}}}}}}}}}}}}}}}}}}}}}}},"y":{"docs":{"14":{"tf":1.0},"8":{"tf":1.0}},"df":2}},"e":{"docs":{},"df":0,"i":{"docs":{},"df":0,"g":{"docs":{},"df":0,"h":{"docs":{},"df":0,"t":{"docs":{"16":{"tf":1.0},"17":{"tf":1.0}},"df":2}}}},"l":{"docs":{},"df":0,"l":{"docs":{"16":{"tf":1.0}},"df":1}}},"h":{"docs":{},"df":0,"o":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{"13":{"tf":1.0},"18":{"tf":1.0}},"df":2,"s":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{"1":{"tf":1.0}},"df":1}}}}},"s":{"docs":{},"df":0,"e":{"docs":{"0":{"tf":1.4142135623730951},"15":{"tf":1.0}},"df":2}}}},"i":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"22":{"tf":1.0}},"df":1}}},"n":{"docs":{"20":{"tf":1.0}},"df":1,"d":{"docs":{},"df":0,"o":{"docs":{},"df":0,"w":{"docs":{"0":{"tf":1.7320508075688772},"1":{"tf":1.7320508075688772},"10":{"tf":1.4142135623730951},"15":{"tf":1.0},"16":{"tf":1.0},"18":{"tf":1.7320508075688772},"19":{"tf":1.4142135623730951},"22":{"tf":1.0},"9":{"tf":1.4142135623730951}},"df":9}}}},"t":{"docs":{},"df":0,"h":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"1":{"tf":1.0}},"df":1}},"o":{"docs":{},"df":0,"u":{"docs":{},"df":0,"t":{"docs":{"22":{"tf":1.0}},"df":1}}}}}},"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"k":{"docs":{"1":{"tf":1.0},"3":{"tf":1.0}},"df":2},"s":{"docs":{},"df":0,"t":{"docs":{"10":{"tf":1.0}},"df":1}}}},"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{"1":{"tf":1.0},"22":{"tf":1.4142135623730951}},"df":2},"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{"21":{"tf":1.0}},"df":1}}}}}}},"x":{"docs":{"0":{"tf":2.6457513110645907},"1":{"tf":1.0},"16":{"tf":1.4142135623730951},"3":{"tf":1.4142135623730951},"4":{"tf":1.0}},"df":5},"z":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{"11":{"tf":1.4142135623730951},"16":{"tf":1.0},"4":{"tf":1.0}},"df":3}}}}}},"breadcrumbs":{"root":{"docs":{},"df":0,"0":{"docs":{"0":{"tf":1.0},"1":{"tf":1.0},"11":{"tf":1.0},"12":{"tf":1.0},"13":{"tf":1.0},"2":{"tf":1.0},"20":{"tf":1.4142135623730951}},"df":7,".":{"docs":{},"df":0,"0":{"docs":{"16":{"tf":1.4142135623730951},"3":{"tf":1.0}},"df":2,"1":{"docs":{"12":{"tf":1.0}},"df":1},"2":{"docs":{},"df":0,",":{"docs":{},"df":0,"0":{"docs":{},"df":0,".":{"docs":{},"df":0,"0":{"docs":{},"df":0,"4":{"docs":{},"df":0,",":{"docs":{},"df":0,"0":{"docs":{},"df":0,".":{"docs":{},"df":0,"0":{"docs":{},"df":0,"8":{"docs":{},"df":0,",":{"docs":{},"df":0,"0":{"docs":{},"df":0,".":{"docs":{},"df":0,"1":{"docs":{},"df":0,"6":{"docs":{"19":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}},"1":{"docs":{"12":{"tf":1.0},"16":{"tf":1.0}},"df":2},"2":{"docs":{},"df":0,"5":{"docs":{"1":{"tf":1.4142135623730951}},"df":1},"6":{"docs":{},"df":0,"3":{"docs":{},"df":0,"3":{"docs":{"12":{"tf":1.0}},"df":1}}}},"5":{"docs":{"1":{"tf":1.0},"19":{"tf":1.0}},"df":2}}},"1":{"docs":{"1":{"tf":1.0},"11":{"tf":1.4142135623730951},"12":{"tf":1.0},"13":{"tf":1.4142135623730951},"15":{"tf":1.0},"16":{"tf":1.7320508075688772},"19":{"tf":2.0},"20":{"tf":1.4142135623730951},"7":{"tf":1.0}},"df":9,".":{"docs":{},"df":0,"0":{"docs":{"1":{"tf":1.4142135623730951},"12":{"tf":1.0},"20":{"tf":1.0},"3":{"tf":1.4142135623730951},"9":{"tf":1.0}},"df":5,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"a":{"docs":{},"df":0,"b":{"docs":{"16":{"tf":1.0}},"df":1}}}}},"2":{"docs":{"12":{"tf":1.4142135623730951}},"df":1},"5":{"docs":{"1":{"tf":1.0}},"df":1}},"0":{"docs":{"19":{"tf":1.0}},"df":1},"2":{"docs":{"16":{"tf":1.4142135623730951}},"df":1},"3":{"docs":{"19":{"tf":1.0}},"df":1},"6":{"docs":{"20":{"tf":1.0}},"df":1},"7":{"docs":{"21":{"tf":1.0}},"df":1},"e":{"docs":{"16":{"tf":1.4142135623730951}},"df":1}},"2":{"docs":{"1":{"tf":1.7320508075688772},"12":{"tf":1.4142135623730951},"16":{"tf":1.7320508075688772},"19":{"tf":1.4142135623730951},"20":{"tf":1.4142135623730951},"3":{"tf":1.0},"9":{"tf":1.0}},"df":7,".":{"docs":{},"df":0,"0":{"docs":{"1":{"tf":1.0},"20":{"tf":1.0},"7":{"tf":1.0}},"df":3},"5":{"docs":{"20":{"tf":1.0}},"df":1}},"/":{"docs":{},"df":0,"d":{"docs":{},"df":0,")":{"docs":{},"df":0,"·":{"docs":{},"df":0,"s":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"(":{"docs":{},"df":0,"√":{"docs":{},"df":0,"e":{"docs":{},"df":0,"_":{"docs":{},"df":0,"m":{"docs":{},"df":0,"·":{"docs":{},"df":0,"x":{"docs":{"1":{"tf":1.0}},"df":1}}}}}}}}}}}}}},"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"s":{"docs":{},"df":0,"(":{"docs":{},"df":0,"√":{"docs":{},"df":0,"e":{"docs":{},"df":0,"_":{"docs":{},"df":0,"m":{"docs":{"3":{"tf":1.0}},"df":1}}}}}}}}},"3":{"docs":{"20":{"tf":1.0}},"df":1,".":{"docs":{},"df":0,"5":{"docs":{"19":{"tf":1.0}},"df":1}},"2":{"docs":{},"df":0,".":{"docs":{},"df":0,"0":{"docs":{"12":{"tf":1.0}},"df":1}}},"d":{"docs":{"7":{"tf":1.0}},"df":1}},"4":{"docs":{"15":{"tf":1.0},"16":{"tf":1.0},"19":{"tf":1.0}},"df":3,"0":{"docs":{"19":{"tf":1.0}},"df":1},"8":{"docs":{"3":{"tf":1.0}},"df":1},"d":{"docs":{"0":{"tf":1.0},"1":{"tf":1.0}},"df":2}},"6":{"docs":{"7":{"tf":1.4142135623730951}},"df":1},"8":{"docs":{"12":{"tf":1.0},"3":{"tf":1.0},"7":{"tf":1.0},"9":{"tf":1.0}},"df":4,"0":{"docs":{},"df":0,"0":{"docs":{"19":{"tf":1.0}},"df":1}}},"_":{"docs":{},"df":0,"l":{"docs":{"2":{"tf":1.0}},"df":1},"m":{"docs":{"3":{"tf":1.4142135623730951},"4":{"tf":1.0}},"df":2,"(":{"docs":{},"df":0,"x":{"docs":{"1":{"tf":1.0}},"df":1}}}},"a":{"docs":{},"df":0,"b":{"docs":{},"df":0,"o":{"docs":{},"df":0,"v":{"docs":{"17":{"tf":1.0}},"df":1}}},"c":{"docs":{},"df":0,"c":{"docs":{},"df":0,"u":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"i":{"docs":{"12":{"tf":1.0}},"df":1}}}}}}},"d":{"docs":{},"df":0,"d":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{"21":{"tf":1.0}},"df":1}}}}},"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"s":{"docs":{"0":{"tf":1.0},"22":{"tf":1.0}},"df":2}}}}}},"f":{"docs":{},"df":0,"f":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"22":{"tf":1.0}},"df":1}}}}},"g":{"docs":{},"df":0,"a":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{"16":{"tf":1.0},"17":{"tf":1.4142135623730951},"9":{"tf":1.7320508075688772}},"df":3}}}}},"r":{"docs":{},"df":0,"e":{"docs":{"12":{"tf":1.0},"17":{"tf":1.0}},"df":2,"e":{"docs":{},"df":0,"m":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"10":{"tf":1.0},"15":{"tf":1.0}},"df":2}}}}}}}},"l":{"docs":{},"df":0,"g":{"docs":{},"df":0,"e":{"docs":{},"df":0,"b":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{"16":{"tf":1.0}},"df":1}}}}},"i":{"docs":{},"df":0,"g":{"docs":{},"df":0,"n":{"docs":{"11":{"tf":1.0}},"df":1}}},"l":{"docs":{},"df":0,"o":{"docs":{},"df":0,"w":{"docs":{},"df":0,"(":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"u":{"docs":{},"df":0,"s":{"docs":{"1":{"tf":1.0},"12":{"tf":1.0},"16":{"tf":1.0},"3":{"tf":1.0},"7":{"tf":1.0},"9":{"tf":1.0}},"df":6}}}}}}}},"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"g":{"docs":{"1":{"tf":1.0},"12":{"tf":1.0}},"df":2}}},"p":{"docs":{},"df":0,"h":{"docs":{},"df":0,"a":{"docs":{},"df":0,"1":{"docs":{},"df":0,"^":{"docs":{},"df":0,"2":{"docs":{"16":{"tf":1.0}},"df":1}}}}}},"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"n":{"docs":{"1":{"tf":1.7320508075688772},"8":{"tf":1.0}},"df":2}}}}},"m":{"docs":{},"df":0,"p":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{},"df":0,"u":{"docs":{},"df":0,"d":{"docs":{"13":{"tf":1.0}},"df":1}}}}}}},"n":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"y":{"docs":{},"df":0,"t":{"docs":{"1":{"tf":1.0},"9":{"tf":1.0}},"df":2}}}},"d":{"docs":{},"df":0,"/":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{"21":{"tf":1.0}},"df":1}}}},"s":{"docs":{},"df":0,"w":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"6":{"tf":1.0}},"df":1}}}}},"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"16":{"tf":1.4142135623730951}},"df":1}}}},"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"f":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{},"df":0,"i":{"docs":{"4":{"tf":1.0},"8":{"tf":1.0}},"df":2}}}}}}},"s":{"docs":{},"df":0,"s":{"docs":{},"df":0,"e":{"docs":{},"df":0,"m":{"docs":{},"df":0,"b":{"docs":{},"df":0,"l":{"docs":{"16":{"tf":1.0},"21":{"tf":1.0},"3":{"tf":1.0},"5":{"tf":1.0}},"df":4,"e":{"docs":{},"df":0,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"g":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"d":{"docs":{"3":{"tf":1.0}},"df":1}}}}}}}}}},"r":{"docs":{},"df":0,"t":{"docs":{},"df":0,"!":{"docs":{},"df":0,"(":{"docs":{},"df":0,"(":{"docs":{},"df":0,"c":{"docs":{},"df":0,"u":{"docs":{},"df":0,"t":{"docs":{},"df":0,"o":{"docs":{},"df":0,"f":{"docs":{},"df":0,"f":{"docs":{},"df":0,".":{"docs":{},"df":0,"x":{"docs":{},"df":0,"i":{"docs":{},"df":0,"(":{"docs":{},"df":0,"0":{"docs":{},"df":0,".":{"docs":{},"df":0,"2":{"docs":{},"df":0,"6":{"docs":{"16":{"tf":1.0}},"df":1}}}}}}}}}}}}}},"m":{"docs":{},"df":0,"u":{"docs":{},"df":0,"1":{"docs":{},"df":0,"_":{"docs":{},"df":0,"f":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"m":{"docs":{},"df":0,"_":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"p":{"docs":{},"df":0,"h":{"docs":{},"df":0,"a":{"docs":{},"df":0,"(":{"docs":{},"df":0,"2":{"docs":{},"df":0,".":{"docs":{},"df":0,"0":{"docs":{"16":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}},"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"p":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"t":{"docs":{},"df":0,".":{"docs":{},"df":0,"a":{"docs":{},"df":0,"u":{"docs":{},"df":0,"x":{"docs":{},"df":0,"_":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"y":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{},"df":0,"_":{"docs":{},"df":0,"o":{"docs":{},"df":0,"k":{"docs":{"9":{"tf":1.0}},"df":1}}}}}}}}}}}}}}},"c":{"docs":{},"df":0,"h":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"k":{"docs":{},"df":0,"s":{"docs":{},"df":0,".":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"(":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"l":{"docs":{},"df":0,"(":{"docs":{},"df":0,"|":{"docs":{},"df":0,"c":{"docs":{"9":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}},"o":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"7":{"tf":1.0}},"df":1}}}}}}}}}}}},"s":{"docs":{},"df":0,"h":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"l":{"docs":{},"df":0,"o":{"docs":{},"df":0,"w":{"docs":{"12":{"tf":1.0}},"df":1}}}}}},"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,".":{"docs":{},"df":0,"b":{"docs":{},"df":0,"o":{"docs":{},"df":0,"t":{"docs":{},"df":0,"t":{"docs":{},"df":0,"o":{"docs":{},"df":0,"m":{"docs":{},"df":0,"_":{"docs":{},"df":0,"d":{"docs":{},"df":0,"i":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{},"df":0,"h":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"t":{"docs":{},"df":0,"(":{"docs":{},"df":0,"2":{"docs":{},"df":0,".":{"docs":{},"df":0,"0":{"docs":{"1":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}},"t":{"docs":{},"df":0,"o":{"docs":{},"df":0,"p":{"docs":{},"df":0,"_":{"docs":{},"df":0,"d":{"docs":{},"df":0,"i":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{},"df":0,"h":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"t":{"docs":{"1":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}},"_":{"docs":{},"df":0,"e":{"docs":{},"df":0,"q":{"docs":{},"df":0,"!":{"docs":{},"df":0,"(":{"docs":{},"df":0,"b":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,".":{"docs":{},"df":0,"a":{"docs":{},"df":0,".":{"docs":{},"df":0,"a":{"docs":{},"df":0,"s":{"docs":{},"df":0,"y":{"docs":{},"df":0,"m":{"docs":{},"df":0,"m":{"docs":{},"df":0,"e":{"docs":{},"df":0,"t":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{"3":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}},"c":{"docs":{},"df":0,"u":{"docs":{},"df":0,"t":{"docs":{},"df":0,"o":{"docs":{},"df":0,"f":{"docs":{},"df":0,"f":{"docs":{},"df":0,".":{"docs":{},"df":0,"x":{"docs":{},"df":0,"i":{"docs":{},"df":0,"(":{"docs":{},"df":0,"0":{"docs":{},"df":0,".":{"docs":{},"df":0,"0":{"docs":{"16":{"tf":1.0}},"df":1}}},"c":{"docs":{},"df":0,"u":{"docs":{},"df":0,"t":{"docs":{},"df":0,"o":{"docs":{},"df":0,"f":{"docs":{},"df":0,"f":{"docs":{},"df":0,".":{"docs":{},"df":0,"s":{"docs":{},"df":0,"u":{"docs":{},"df":0,"p":{"docs":{},"df":0,"p":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"t":{"docs":{},"df":0,"_":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"d":{"docs":{},"df":0,"i":{"docs":{},"df":0,"u":{"docs":{"16":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}}}}}}}}},"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"a":{"docs":{},"df":0,"y":{"docs":{},"df":0,"_":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"o":{"docs":{},"df":0,"(":{"docs":{},"df":0,"0":{"docs":{},"df":0,".":{"docs":{},"df":0,"0":{"docs":{"3":{"tf":1.0}},"df":1}}}}}}}}}}}}}}},"p":{"docs":{},"df":0,".":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{},"df":0,"p":{"docs":{},"df":0,"l":{"docs":{},"df":0,"y":{"docs":{},"df":0,"(":{"docs":{},"df":0,"p":{"docs":{},"df":0,".":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{},"df":0,"p":{"docs":{},"df":0,"l":{"docs":{},"df":0,"y":{"docs":{},"df":0,"(":{"docs":{},"df":0,"(":{"docs":{},"df":0,"0":{"docs":{},"df":0,".":{"docs":{},"df":0,"5":{"docs":{"1":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}},"s":{"docs":{},"df":0,"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,".":{"docs":{},"df":0,"t":{"docs":{},"df":0,"h":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"h":{"docs":{},"df":0,"o":{"docs":{},"df":0,"l":{"docs":{},"df":0,"d":{"docs":{"1":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}},"y":{"docs":{},"df":0,"m":{"docs":{},"df":0,"p":{"docs":{},"df":0,"t":{"docs":{},"df":0,"o":{"docs":{},"df":0,"t":{"docs":{"14":{"tf":1.7320508075688772},"15":{"tf":1.0},"16":{"tf":1.0},"17":{"tf":1.0}},"df":4}}}}}}},"t":{"docs":{},"df":0,"o":{"docs":{},"df":0,"m":{"docs":{"22":{"tf":1.0}},"df":1}},"t":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"k":{"docs":{"10":{"tf":1.0}},"df":1}}}}},"u":{"docs":{},"df":0,"x":{"docs":{},"df":0,"i":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{"0":{"tf":1.0},"1":{"tf":2.23606797749979},"9":{"tf":2.23606797749979}},"df":3}}}}}}}},"v":{"docs":{},"df":0,"a":{"docs":{},"df":0,"i":{"docs":{},"df":0,"l":{"docs":{"4":{"tf":1.0}},"df":1}}}}},"b":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"4":{"tf":1.0}},"df":1,"w":{"docs":{},"df":0,"i":{"docs":{},"df":0,"d":{"docs":{},"df":0,"t":{"docs":{},"df":0,"h":{"docs":{"4":{"tf":1.0}},"df":1}}}}}}},"r":{"docs":{"8":{"tf":1.4142135623730951}},"df":1}},"e":{"docs":{},"df":0,"f":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{"1":{"tf":1.0}},"df":1}}},"h":{"docs":{},"df":0,"a":{"docs":{},"df":0,"v":{"docs":{"0":{"tf":1.0}},"df":1}}},"l":{"docs":{},"df":0,"o":{"docs":{},"df":0,"w":{"docs":{"0":{"tf":1.0},"10":{"tf":1.0},"12":{"tf":1.0},"15":{"tf":1.0},"18":{"tf":1.0},"6":{"tf":1.0},"7":{"tf":1.0}},"df":7}}},"t":{"docs":{},"df":0,"w":{"docs":{},"df":0,"e":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{"0":{"tf":1.0},"10":{"tf":1.0},"16":{"tf":1.0},"9":{"tf":1.0}},"df":4}}}}},"y":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"16":{"tf":1.0}},"df":1}}}}},"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{"18":{"tf":1.0}},"df":1}}}},"s":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"12":{"tf":2.0},"17":{"tf":1.0}},"df":2}}}},"t":{"docs":{"22":{"tf":1.0}},"df":1}},"l":{"docs":{},"df":0,"o":{"docs":{},"df":0,"c":{"docs":{},"df":0,"k":{"docs":{"0":{"tf":1.0},"4":{"tf":1.0}},"df":2}}}},"o":{"docs":{},"df":0,"t":{"docs":{},"df":0,"h":{"docs":{"0":{"tf":1.4142135623730951},"1":{"tf":1.0},"12":{"tf":1.0},"15":{"tf":1.0},"19":{"tf":1.0},"21":{"tf":1.0},"7":{"tf":1.0}},"df":7},"t":{"docs":{},"df":0,"o":{"docs":{},"df":0,"m":{"docs":{"0":{"tf":1.4142135623730951},"1":{"tf":1.7320508075688772}},"df":2}}}},"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"0":{"tf":1.0},"1":{"tf":1.0},"13":{"tf":1.0},"4":{"tf":1.7320508075688772},"9":{"tf":1.0}},"df":5,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{"0":{"tf":1.4142135623730951},"1":{"tf":1.0},"11":{"tf":1.0},"3":{"tf":1.0}},"df":4}}}}}}},"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"k":{"docs":{},"df":0,"e":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.4142135623730951},"1":{"tf":1.0},"6":{"tf":1.7320508075688772},"7":{"tf":1.0},"8":{"tf":1.4142135623730951},"9":{"tf":1.0}},"df":6}}}}}},"u":{"docs":{},"df":0,"d":{"docs":{},"df":0,"g":{"docs":{},"df":0,"e":{"docs":{},"df":0,"t":{"docs":{"1":{"tf":1.0}},"df":1}}}},"i":{"docs":{},"df":0,"l":{"docs":{},"df":0,"d":{"docs":{},"df":0,"_":{"docs":{},"df":0,"g":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"d":{"docs":{"3":{"tf":1.0}},"df":1,"(":{"docs":{},"df":0,"s":{"docs":{},"df":0,"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{"3":{"tf":1.0}},"df":1}}}}}}}}}}},"t":{"docs":{"0":{"tf":1.4142135623730951}},"df":1}}},"n":{"docs":{},"df":0,"d":{"docs":{},"df":0,"l":{"docs":{"3":{"tf":1.0}},"df":1}}}},"y":{"docs":{},"df":0,"p":{"docs":{},"df":0,"a":{"docs":{},"df":0,"s":{"docs":{},"df":0,"s":{"docs":{"22":{"tf":1.0}},"df":1}}}}}},"c":{"docs":{"12":{"tf":1.0},"16":{"tf":1.0}},"df":2,".":{"docs":{},"df":0,"o":{"docs":{},"df":0,"k":{"docs":{"9":{"tf":1.0}},"df":1}}},"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"h":{"docs":{"0":{"tf":1.0},"18":{"tf":1.0},"19":{"tf":1.0},"22":{"tf":3.3166247903554}},"df":4}},"n":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{"22":{"tf":1.0}},"df":1}}},"p":{"docs":{},"df":0,"t":{"docs":{},"df":0,"u":{"docs":{},"df":0,"r":{"docs":{"1":{"tf":1.0}},"df":1}}}},"r":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{"1":{"tf":1.4142135623730951},"12":{"tf":1.0},"21":{"tf":1.0}},"df":3}}}},"e":{"docs":{},"df":0,"l":{"docs":{},"df":0,"l":{"docs":{"0":{"tf":1.0},"11":{"tf":1.0},"3":{"tf":2.449489742783178},"4":{"tf":1.0}},"df":4}},"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"0":{"tf":1.0},"3":{"tf":2.0}},"df":2}}}},"r":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"f":{"docs":{},"df":0,"i":{"docs":{"0":{"tf":1.0},"8":{"tf":1.0}},"df":2}}}}}},"h":{"docs":{},"df":0,"a":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"3":{"tf":1.0}},"df":1}},"n":{"docs":{},"df":0,"g":{"docs":{"11":{"tf":1.4142135623730951},"8":{"tf":1.0}},"df":2},"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,"l":{"docs":{"1":{"tf":1.0},"16":{"tf":1.7320508075688772},"4":{"tf":1.0}},"df":3}}}},"p":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"0":{"tf":1.0},"13":{"tf":1.0}},"df":2}}}}},"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{"1":{"tf":1.0}},"df":1}}}}},"c":{"docs":{},"df":0,"k":{"docs":{"0":{"tf":1.4142135623730951},"1":{"tf":1.0},"13":{"tf":1.0},"16":{"tf":1.0},"17":{"tf":1.4142135623730951},"9":{"tf":1.4142135623730951}},"df":6}}},"o":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{"3":{"tf":1.0},"7":{"tf":1.0}},"df":2}}}},"i":{"docs":{"19":{"tf":1.0}},"df":1},"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"s":{"docs":{},"df":0,"s":{"docs":{"1":{"tf":1.0}},"df":1,"i":{"docs":{},"df":0,"f":{"docs":{"8":{"tf":1.0}},"df":1,"i":{"docs":{"8":{"tf":1.0}},"df":1}}}}}},"i":{"docs":{"5":{"tf":1.0},"9":{"tf":1.0}},"df":2},"o":{"docs":{},"df":0,"s":{"docs":{},"df":0,"e":{"docs":{"0":{"tf":1.0},"16":{"tf":1.0},"4":{"tf":1.0}},"df":3},"u":{"docs":{},"df":0,"r":{"docs":{"0":{"tf":1.0},"12":{"tf":1.0},"16":{"tf":1.0},"3":{"tf":1.7320508075688772},"4":{"tf":1.7320508075688772}},"df":5}}}}},"o":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"s":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{"7":{"tf":1.0}},"df":1}}}}}},"d":{"docs":{},"df":0,"e":{"docs":{"0":{"tf":1.4142135623730951},"20":{"tf":1.4142135623730951},"22":{"tf":1.0}},"df":3}},"e":{"docs":{},"df":0,"f":{"docs":{},"df":0,"f":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{},"df":0,"i":{"docs":{"0":{"tf":1.0},"15":{"tf":2.0},"16":{"tf":1.0},"17":{"tf":1.0},"18":{"tf":1.0},"19":{"tf":1.0}},"df":6}}}}}},"l":{"docs":{"21":{"tf":1.0},"5":{"tf":1.0}},"df":2,"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"7":{"tf":1.0}},"df":1}}}},"u":{"docs":{},"df":0,"m":{"docs":{},"df":0,"n":{"docs":{"4":{"tf":1.4142135623730951}},"df":1}}}},"m":{"docs":{},"df":0,"b":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{"1":{"tf":1.0}},"df":1}}}}}}}},"e":{"docs":{"0":{"tf":1.0},"15":{"tf":1.0},"20":{"tf":1.0},"8":{"tf":1.4142135623730951}},"df":4},"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"0":{"tf":1.0},"1":{"tf":1.0},"18":{"tf":2.0},"19":{"tf":1.0},"20":{"tf":1.4142135623730951},"21":{"tf":1.0},"22":{"tf":1.4142135623730951}},"df":7}}},"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"20":{"tf":1.0}},"df":1}}},"u":{"docs":{},"df":0,"t":{"docs":{"1":{"tf":1.0}},"df":1}}},"p":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{"17":{"tf":1.0}},"df":1}},"o":{"docs":{},"df":0,"n":{"docs":{"16":{"tf":1.0}},"df":1}},"u":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.4142135623730951},"1":{"tf":1.0},"14":{"tf":1.0},"15":{"tf":1.0},"8":{"tf":1.0}},"df":5}}}},"n":{"docs":{},"df":0,"d":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.7320508075688772},"1":{"tf":1.0},"16":{"tf":1.4142135623730951},"3":{"tf":1.0},"4":{"tf":1.7320508075688772}},"df":5}}},"f":{"docs":{},"df":0,"i":{"docs":{},"df":0,"g":{"docs":{"20":{"tf":1.4142135623730951}},"df":1,"u":{"docs":{},"df":0,"r":{"docs":{"20":{"tf":2.0},"22":{"tf":1.0}},"df":2}}},"r":{"docs":{},"df":0,"m":{"docs":{"17":{"tf":1.0}},"df":1}}}},"s":{"docs":{},"df":0,"t":{"docs":{},"df":0,"r":{"docs":{},"df":0,"u":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"3":{"tf":1.4142135623730951},"4":{"tf":1.0}},"df":2}}}}}},"t":{"docs":{},"df":0,"a":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"20":{"tf":1.0}},"df":1}}},"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0},"22":{"tf":1.0}},"df":2}}},"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"u":{"docs":{},"df":0,"u":{"docs":{},"df":0,"m":{"docs":{"1":{"tf":1.4142135623730951},"10":{"tf":1.0}},"df":2}}}}},"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"l":{"docs":{"1":{"tf":1.0}},"df":1}}}},"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"g":{"docs":{"12":{"tf":1.0},"20":{"tf":1.0},"3":{"tf":1.0}},"df":3}}}}},"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"d":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"21":{"tf":1.0},"5":{"tf":1.0}},"df":2}}}}},"r":{"docs":{},"df":0,"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"0":{"tf":1.0},"15":{"tf":1.4142135623730951},"16":{"tf":1.0}},"df":3}}},"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{"16":{"tf":2.0},"4":{"tf":1.0}},"df":2}}}}}}},"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0},"1":{"tf":1.0},"12":{"tf":2.23606797749979},"17":{"tf":1.0},"4":{"tf":1.4142135623730951},"8":{"tf":1.4142135623730951},"9":{"tf":1.0}},"df":7,"_":{"docs":{},"df":0,"b":{"docs":{},"df":0,"e":{"docs":{},"df":0,"l":{"docs":{},"df":0,"o":{"docs":{},"df":0,"w":{"docs":{},"df":0,"(":{"docs":{},"df":0,"1":{"docs":{},"df":0,".":{"docs":{},"df":0,"0":{"docs":{"12":{"tf":1.4142135623730951}},"df":1}}}}}}}}}}}},"p":{"docs":{},"df":0,"l":{"docs":{"4":{"tf":1.0}},"df":1}}}},"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{"0":{"tf":1.4142135623730951}},"df":1}}},"i":{"docs":{},"df":0,"t":{"docs":{},"df":0,"g":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"d":{"docs":{"12":{"tf":1.0}},"df":1,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"w":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{},"df":0,"h":{"docs":{},"df":0,"_":{"docs":{},"df":0,"s":{"docs":{},"df":0,"p":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"g":{"docs":{},"df":0,"(":{"docs":{},"df":0,"3":{"docs":{},"df":0,".":{"docs":{},"df":0,"0":{"docs":{"12":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}},"i":{"docs":{},"df":0,"c":{"docs":{"0":{"tf":1.7320508075688772},"10":{"tf":2.23606797749979},"11":{"tf":1.4142135623730951},"12":{"tf":1.4142135623730951},"13":{"tf":1.0},"14":{"tf":1.0},"18":{"tf":1.7320508075688772},"19":{"tf":1.7320508075688772}},"df":8}}}},"o":{"docs":{},"df":0,"s":{"docs":{},"df":0,"s":{"docs":{"0":{"tf":1.4142135623730951},"1":{"tf":1.4142135623730951},"11":{"tf":1.4142135623730951},"16":{"tf":1.4142135623730951},"17":{"tf":1.4142135623730951},"9":{"tf":1.4142135623730951}},"df":6}}},"u":{"docs":{},"df":0,"c":{"docs":{},"df":0,"i":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{"3":{"tf":1.0}},"df":1}}}}}},"s":{"docs":{},"df":0,"v":{"docs":{"21":{"tf":1.0}},"df":1,"|":{"docs":{},"df":0,"j":{"docs":{},"df":0,"s":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"|":{"docs":{},"df":0,"b":{"docs":{},"df":0,"o":{"docs":{},"df":0,"t":{"docs":{},"df":0,"h":{"docs":{"21":{"tf":1.0}},"df":1}}}}}}}}}}}},"u":{"docs":{},"df":0,"b":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{"17":{"tf":1.0}},"df":1}}},"t":{"docs":{},"df":0,"o":{"docs":{},"df":0,"f":{"docs":{},"df":0,"f":{"docs":{"16":{"tf":1.7320508075688772}},"df":1,"s":{"docs":{},"df":0,"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{"16":{"tf":1.0}},"df":1,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,"w":{"docs":{},"df":0,"(":{"docs":{},"df":0,"0":{"docs":{},"df":0,".":{"docs":{},"df":0,"2":{"docs":{},"df":0,"6":{"docs":{"16":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}},"d":{"docs":{"0":{"tf":1.4142135623730951},"1":{"tf":2.0},"12":{"tf":1.0},"19":{"tf":1.4142135623730951},"2":{"tf":1.0},"20":{"tf":1.0}},"df":6,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"a":{"docs":{},"df":0,"y":{"docs":{"0":{"tf":1.0},"13":{"tf":1.0},"16":{"tf":1.0},"3":{"tf":1.0},"4":{"tf":1.4142135623730951},"7":{"tf":1.0}},"df":6,"_":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"o":{"docs":{"3":{"tf":1.0}},"df":1}}}}}}}}},"e":{"docs":{},"df":0,"p":{"docs":{"12":{"tf":1.4142135623730951}},"df":1}},"f":{"docs":{},"df":0,"a":{"docs":{},"df":0,"u":{"docs":{},"df":0,"l":{"docs":{},"df":0,"t":{"docs":{"21":{"tf":1.0},"22":{"tf":1.0},"7":{"tf":1.0}},"df":3}}}},"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{"16":{"tf":1.0}},"df":1}}}},"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{"10":{"tf":1.0}},"df":1}}},"n":{"docs":{},"df":0,"s":{"docs":{"4":{"tf":1.0}},"df":1}},"s":{"docs":{},"df":0,"i":{"docs":{},"df":0,"g":{"docs":{},"df":0,"n":{"docs":{"10":{"tf":1.0}},"df":1}}}},"t":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"h":{"docs":{"0":{"tf":1.0}},"df":1}}},"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{"0":{"tf":1.0},"10":{"tf":1.0},"11":{"tf":1.4142135623730951},"12":{"tf":2.0},"18":{"tf":1.0},"19":{"tf":1.0}},"df":6}}}},"r":{"docs":{},"df":0,"m":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"15":{"tf":1.0},"22":{"tf":1.4142135623730951}},"df":2,"i":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0},"22":{"tf":1.0}},"df":2}}}}}}}}}},"i":{"docs":{},"df":0,"a":{"docs":{},"df":0,"g":{"docs":{},"df":0,"n":{"docs":{},"df":0,"o":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{"12":{"tf":1.0}},"df":1}}}}}},"f":{"docs":{},"df":0,"f":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"0":{"tf":1.0}},"df":1}}}},"g":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{"21":{"tf":1.0}},"df":1}}},"m":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"s":{"docs":{},"df":0,"i":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{"11":{"tf":1.0}},"df":1}}}}}}},"r":{"docs":{"22":{"tf":1.0}},"df":1,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{"22":{"tf":1.0}},"df":1}}}}}},"i":{"docs":{},"df":0,"c":{"docs":{},"df":0,"h":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.7320508075688772},"1":{"tf":1.7320508075688772},"15":{"tf":1.0},"3":{"tf":1.0},"4":{"tf":1.0},"8":{"tf":1.4142135623730951}},"df":6,"/":{"docs":{},"df":0,"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,"u":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"n":{"docs":{"3":{"tf":1.0}},"df":1}}}}}}}}}}}}}}},"s":{"docs":{},"df":0,"a":{"docs":{},"df":0,"g":{"docs":{},"df":0,"r":{"docs":{"12":{"tf":1.0}},"df":1}}},"c":{"docs":{},"df":0,"i":{"docs":{},"df":0,"p":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"20":{"tf":1.0}},"df":1}}}}},"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"p":{"docs":{"16":{"tf":1.0}},"df":1},"t":{"docs":{"0":{"tf":1.7320508075688772},"1":{"tf":1.4142135623730951},"10":{"tf":1.4142135623730951},"11":{"tf":1.0},"13":{"tf":1.0},"18":{"tf":1.0},"2":{"tf":2.0},"3":{"tf":2.23606797749979},"4":{"tf":1.7320508075688772},"5":{"tf":1.0},"7":{"tf":1.0}},"df":11,"e":{"docs":{},"df":0,"_":{"docs":{},"df":0,"s":{"docs":{},"df":0,"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{},"df":0,"r":{"docs":{},"df":0,"u":{"docs":{},"df":0,"m":{"docs":{},"df":0,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"s":{"docs":{},"df":0,"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{"7":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}},"t":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"c":{"docs":{"10":{"tf":1.0}},"df":1}}}}},"v":{"docs":{},"df":0,"e":{"docs":{"0":{"tf":1.0}},"df":1}}},"o":{"docs":{},"df":0,"c":{"docs":{"0":{"tf":1.0}},"df":1},"n":{"docs":{},"df":0,"e":{"docs":{"0":{"tf":1.0}},"df":1}},"u":{"docs":{},"df":0,"b":{"docs":{},"df":0,"l":{"docs":{"7":{"tf":1.0}},"df":1}}},"w":{"docs":{},"df":0,"n":{"docs":{"4":{"tf":1.0}},"df":1}}},"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"f":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0}},"df":1}},"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{"16":{"tf":1.0}},"df":1},"r":{"docs":{"1":{"tf":1.0}},"df":1}}}}},"u":{"docs":{},"df":0,"m":{"docs":{},"df":0,"p":{"docs":{"21":{"tf":1.0},"5":{"tf":1.7320508075688772}},"df":2}}}},"e":{"docs":{"0":{"tf":1.7320508075688772},"1":{"tf":1.0},"14":{"tf":1.0},"16":{"tf":1.0}},"df":4,"_":{"docs":{},"df":0,"m":{"docs":{"1":{"tf":1.0},"3":{"tf":1.0}},"df":2}},"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"h":{"docs":{"0":{"tf":1.4142135623730951},"1":{"tf":1.0},"14":{"tf":1.0},"17":{"tf":1.4142135623730951},"4":{"tf":1.0},"7":{"tf":1.0},"8":{"tf":1.0}},"df":7}}},"d":{"docs":{},"df":0,"g":{"docs":{"0":{"tf":1.7320508075688772},"1":{"tf":1.4142135623730951},"16":{"tf":1.0}},"df":3}},"f":{"docs":{},"df":0,"f":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"7":{"tf":1.0}},"df":1}}}}},"i":{"docs":{},"df":0,"g":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"f":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"1":{"tf":1.4142135623730951},"4":{"tf":1.0}},"df":2}}}}},"p":{"docs":{},"df":0,"a":{"docs":{},"df":0,"i":{"docs":{},"df":0,"r":{"docs":{"1":{"tf":1.0}},"df":1}}}},"v":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"u":{"docs":{"0":{"tf":2.449489742783178},"1":{"tf":2.23606797749979},"10":{"tf":1.4142135623730951},"11":{"tf":1.0},"12":{"tf":1.7320508075688772},"13":{"tf":1.0},"14":{"tf":1.0},"17":{"tf":1.0},"4":{"tf":1.7320508075688772},"6":{"tf":1.0},"8":{"tf":1.4142135623730951},"9":{"tf":1.4142135623730951}},"df":12}}},"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{"1":{"tf":1.0},"3":{"tf":1.0},"8":{"tf":1.0}},"df":3}}}}}}}}}},"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"m":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{"1":{"tf":1.0}},"df":1}}}}}}}},"i":{"docs":{},"df":0,"m":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"3":{"tf":1.0}},"df":1}}}},"l":{"docs":{"19":{"tf":2.0},"20":{"tf":2.0}},"df":2,"_":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{"16":{"tf":1.0}},"df":1}}}}}},"s":{"docs":{},"df":0,"e":{"docs":{},"df":0,"w":{"docs":{},"df":0,"h":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"0":{"tf":1.0}},"df":1}}}}}}},"m":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"g":{"docs":{"12":{"tf":1.0},"14":{"tf":1.7320508075688772},"15":{"tf":1.0},"16":{"tf":1.0},"17":{"tf":1.0},"18":{"tf":1.4142135623730951},"19":{"tf":1.4142135623730951}},"df":7}}}},"n":{"docs":{},"df":0,"d":{"docs":{"0":{"tf":1.4142135623730951},"11":{"tf":1.0},"15":{"tf":1.0},"19":{"tf":1.0},"4":{"tf":2.23606797749979},"7":{"tf":1.0},"8":{"tf":1.4142135623730951}},"df":7,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{"3":{"tf":1.0}},"df":1,"i":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"d":{"docs":{},"df":0,"i":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{},"df":0,"h":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"t":{"docs":{"3":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}},"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"g":{"docs":{},"df":0,"i":{"docs":{"1":{"tf":1.0},"15":{"tf":1.0},"3":{"tf":1.0},"4":{"tf":1.4142135623730951}},"df":4}}}},"f":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"c":{"docs":{"8":{"tf":1.0}},"df":1}}}},"o":{"docs":{},"df":0,"u":{"docs":{},"df":0,"g":{"docs":{},"df":0,"h":{"docs":{"7":{"tf":1.0}},"df":1}}}},"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"r":{"docs":{"22":{"tf":1.0}},"df":1}}},"v":{"docs":{},"df":0,"i":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{"22":{"tf":1.0}},"df":1}}}}}},"p":{"docs":{"19":{"tf":1.0}},"df":1},"q":{"docs":{},"df":0,"u":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{"13":{"tf":1.0},"16":{"tf":1.0}},"df":2}},"i":{"docs":{},"df":0,"v":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{"16":{"tf":1.0}},"df":1}}}}}},"r":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{"1":{"tf":1.0},"10":{"tf":1.0},"12":{"tf":1.0},"20":{"tf":1.4142135623730951},"3":{"tf":1.0},"4":{"tf":1.0},"7":{"tf":1.0},"8":{"tf":1.4142135623730951}},"df":8}}}},"s":{"docs":{},"df":0,"c":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{"1":{"tf":1.0}},"df":1}}},"s":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{"0":{"tf":1.0},"1":{"tf":1.0},"10":{"tf":1.0}},"df":3}}}}},"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"m":{"docs":{"8":{"tf":1.0}},"df":1}}}},"v":{"docs":{"7":{"tf":1.0}},"df":1,".":{"docs":{},"df":0,"l":{"docs":{},"df":0,"o":{"docs":{},"df":0,"w":{"docs":{"7":{"tf":1.0}},"df":1}}},"m":{"docs":{"7":{"tf":1.0}},"df":1},"p":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{"7":{"tf":1.0}},"df":1}}},"u":{"docs":{},"df":0,"p":{"docs":{},"df":0,"p":{"docs":{"7":{"tf":1.0}},"df":1}}}},"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"u":{"docs":{"12":{"tf":1.0},"16":{"tf":1.0}},"df":2}}},"e":{"docs":{},"df":0,"n":{"docs":{"1":{"tf":1.4142135623730951}},"df":1,"/":{"docs":{},"df":0,"o":{"docs":{},"df":0,"d":{"docs":{},"df":0,"d":{"docs":{"8":{"tf":1.0}},"df":1}}}},"l":{"docs":{},"df":0,"i":{"docs":{"3":{"tf":1.0}},"df":1}}},"r":{"docs":{},"df":0,"y":{"docs":{},"df":0,"t":{"docs":{},"df":0,"h":{"docs":{"1":{"tf":1.0},"17":{"tf":1.0},"4":{"tf":1.0}},"df":3}},"w":{"docs":{},"df":0,"h":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"0":{"tf":1.0}},"df":1}}}}}}},"i":{"docs":{},"df":0,"d":{"docs":{"10":{"tf":1.0}},"df":1}}},"x":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0},"12":{"tf":1.0},"17":{"tf":1.0},"3":{"tf":1.0},"4":{"tf":1.0}},"df":5,"l":{"docs":{},"df":0,"i":{"docs":{"0":{"tf":1.0},"11":{"tf":1.0},"16":{"tf":1.0},"17":{"tf":1.0},"21":{"tf":1.0},"3":{"tf":1.7320508075688772},"4":{"tf":1.0}},"df":7}}}},"m":{"docs":{},"df":0,"p":{"docs":{},"df":0,"l":{"docs":{"20":{"tf":1.0}},"df":1}}}},"i":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{"1":{"tf":1.0}},"df":1}},"t":{"docs":{"18":{"tf":1.0},"20":{"tf":1.4142135623730951}},"df":2}},"p":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"4":{"tf":1.0}},"df":1},"s":{"docs":{"17":{"tf":1.0}},"df":1}}},"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"8":{"tf":1.0}},"df":1}},"n":{"docs":{},"df":0,"s":{"docs":{"22":{"tf":1.0}},"df":1}}},"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"t":{"docs":{"21":{"tf":1.0},"5":{"tf":1.0}},"df":2}},"s":{"docs":{"18":{"tf":1.0}},"df":1}},"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"s":{"docs":{"0":{"tf":1.0}},"df":1}}}}},"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"n":{"docs":{"5":{"tf":1.0}},"df":1}}},"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{},"df":0,"o":{"docs":{},"df":0,"l":{"docs":{"12":{"tf":1.4142135623730951},"8":{"tf":1.4142135623730951}},"df":2}}}}}}}},"f":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"e":{"docs":{"11":{"tf":1.4142135623730951},"3":{"tf":1.4142135623730951}},"df":2},"t":{"docs":{"1":{"tf":1.0}},"df":1,"o":{"docs":{},"df":0,"r":{"docs":{"4":{"tf":1.0},"8":{"tf":1.0}},"df":2}}}},"i":{"docs":{},"df":0,"l":{"docs":{"20":{"tf":1.0}},"df":1,"u":{"docs":{},"df":0,"r":{"docs":{"18":{"tf":1.0},"20":{"tf":1.0}},"df":2}}}},"m":{"docs":{},"df":0,"i":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{"12":{"tf":1.0},"8":{"tf":1.0}},"df":2}}}},"r":{"docs":{"7":{"tf":1.0}},"df":1},"s":{"docs":{},"df":0,"t":{"docs":{"19":{"tf":1.0}},"df":1}}},"e":{"docs":{},"df":0,"w":{"docs":{"12":{"tf":1.0},"17":{"tf":1.0}},"df":2}},"i":{"docs":{},"df":0,"e":{"docs":{},"df":0,"l":{"docs":{},"df":0,"d":{"docs":{"8":{"tf":1.0}},"df":1}}},"l":{"docs":{},"df":0,"e":{"docs":{"20":{"tf":1.4142135623730951},"21":{"tf":1.0},"22":{"tf":1.4142135623730951}},"df":3}},"n":{"docs":{},"df":0,"e":{"docs":{"20":{"tf":1.0}},"df":1,"s":{"docs":{},"df":0,"t":{"docs":{"8":{"tf":1.0}},"df":1}}},"i":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.7320508075688772},"4":{"tf":1.0}},"df":2}}},"r":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{"1":{"tf":1.4142135623730951},"12":{"tf":1.0},"13":{"tf":1.0},"15":{"tf":1.7320508075688772},"16":{"tf":1.0},"19":{"tf":1.4142135623730951},"6":{"tf":1.0}},"df":7}}},"t":{"docs":{"0":{"tf":1.0},"12":{"tf":1.0},"15":{"tf":1.0},"17":{"tf":1.4142135623730951},"18":{"tf":1.0}},"df":5},"v":{"docs":{},"df":0,"e":{"docs":{"4":{"tf":1.0}},"df":1}},"x":{"docs":{"11":{"tf":1.0},"16":{"tf":1.4142135623730951}},"df":2}},"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"g":{"docs":{"20":{"tf":1.0},"5":{"tf":1.0}},"df":2},"t":{"docs":{"20":{"tf":1.0}},"df":1}},"i":{"docs":{},"df":0,"p":{"docs":{"3":{"tf":1.0}},"df":1}},"o":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{"21":{"tf":1.0}},"df":1}}},"u":{"docs":{},"df":0,"x":{"docs":{"16":{"tf":1.0}},"df":1}}},"n":{"docs":{"1":{"tf":1.0},"12":{"tf":1.0},"16":{"tf":1.0},"3":{"tf":1.0},"7":{"tf":1.0},"9":{"tf":1.0}},"df":6},"o":{"docs":{},"df":0,"l":{"docs":{},"df":0,"l":{"docs":{},"df":0,"o":{"docs":{},"df":0,"w":{"docs":{"0":{"tf":1.0}},"df":1}}}},"r":{"docs":{},"df":0,"m":{"docs":{"0":{"tf":1.0},"8":{"tf":1.4142135623730951}},"df":2,"a":{"docs":{},"df":0,"t":{"docs":{"21":{"tf":1.0}},"df":1}},"u":{"docs":{},"df":0,"l":{"docs":{},"df":0,"a":{"docs":{"17":{"tf":1.4142135623730951}},"df":1}}}}}},"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{"19":{"tf":1.0}},"df":1}},"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0}},"df":1}}}},"u":{"docs":{},"df":0,"l":{"docs":{},"df":0,"l":{"docs":{"9":{"tf":1.0}},"df":1}},"n":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{"11":{"tf":1.4142135623730951}},"df":1}}}}}}}},"g":{"docs":{"12":{"tf":1.7320508075688772}},"df":1,"a":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"4":{"tf":1.0}},"df":1}},"p":{"docs":{"0":{"tf":1.0}},"df":1}},"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"0":{"tf":1.0},"13":{"tf":1.7320508075688772},"15":{"tf":1.0},"18":{"tf":1.0},"4":{"tf":1.0}},"df":5}},"u":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"8":{"tf":1.0}},"df":1}}}},"o":{"docs":{},"df":0,"m":{"docs":{},"df":0,"e":{"docs":{},"df":0,"t":{"docs":{},"df":0,"r":{"docs":{"17":{"tf":1.0}},"df":1,"i":{"docs":{"1":{"tf":1.7320508075688772}},"df":1}}}}}}},"h":{"docs":{},"df":0,"o":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{"3":{"tf":2.449489742783178}},"df":1}}}},"i":{"docs":{},"df":0,"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{"1":{"tf":1.0}},"df":1}}}},"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"d":{"docs":{"1":{"tf":1.0},"11":{"tf":1.0},"12":{"tf":1.4142135623730951},"13":{"tf":1.0},"16":{"tf":1.0},"17":{"tf":1.0},"3":{"tf":1.7320508075688772},"4":{"tf":1.4142135623730951},"7":{"tf":1.0},"8":{"tf":1.4142135623730951}},"df":10,"s":{"docs":{},"df":0,"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{"3":{"tf":1.0}},"df":1,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,"w":{"docs":{},"df":0,"(":{"docs":{},"df":0,"3":{"docs":{},"df":0,".":{"docs":{},"df":0,"0":{"docs":{"3":{"tf":1.0}},"df":1}}}}}}}}}}}}}}},"o":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"1":{"tf":1.0}},"df":1}}},"w":{"docs":{"0":{"tf":1.0},"10":{"tf":1.0}},"df":2}}},"u":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"d":{"docs":{"17":{"tf":1.0}},"df":1}}},"i":{"docs":{},"df":0,"d":{"docs":{"0":{"tf":1.4142135623730951}},"df":1}}}},"h":{"docs":{},"df":0,"_":{"docs":{},"df":0,"i":{"docs":{"3":{"tf":1.0}},"df":1},"x":{"docs":{"3":{"tf":1.0}},"df":1},"y":{"docs":{},"df":0,")":{"docs":{},"df":0,")":{"docs":{},"df":0,"/":{"docs":{},"df":0,"h":{"docs":{},"df":0,"_":{"docs":{},"df":0,"i":{"docs":{"3":{"tf":1.0}},"df":1}}}}}}}},"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"f":{"docs":{"0":{"tf":1.7320508075688772},"1":{"tf":1.7320508075688772},"10":{"tf":1.0},"19":{"tf":1.0},"4":{"tf":1.0},"7":{"tf":1.0},"8":{"tf":1.0}},"df":7},"v":{"docs":{"17":{"tf":1.0}},"df":1}},"s":{"docs":{},"df":0,"h":{"docs":{"22":{"tf":1.0}},"df":1}}},"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"t":{"docs":{},"df":0,"h":{"docs":{"16":{"tf":1.0}},"df":1}}}}},"i":{"docs":{},"df":0,"t":{"docs":{"22":{"tf":1.4142135623730951}},"df":1}},"o":{"docs":{},"df":0,"l":{"docs":{},"df":0,"d":{"docs":{"1":{"tf":1.0},"16":{"tf":1.0}},"df":2}}},"u":{"docs":{},"df":0,"g":{"docs":{"10":{"tf":1.0}},"df":1}}},"i":{"docs":{},"df":0,".":{"docs":{"12":{"tf":1.0}},"df":1},"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0},"15":{"tf":1.0},"16":{"tf":1.0},"22":{"tf":1.0}},"df":4}}},"x":{"docs":{"4":{"tf":1.0}},"df":1}},"m":{"docs":{},"df":0,"p":{"docs":{},"df":0,"o":{"docs":{},"df":0,"s":{"docs":{"3":{"tf":1.0}},"df":1}}}},"n":{"docs":{},"df":0,"c":{"docs":{},"df":0,"l":{"docs":{},"df":0,"u":{"docs":{},"df":0,"d":{"docs":{"0":{"tf":1.0}},"df":1}}}},"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"0":{"tf":1.4142135623730951},"1":{"tf":1.0},"10":{"tf":1.0},"14":{"tf":1.0},"15":{"tf":1.0},"18":{"tf":1.0}},"df":6}}}},"x":{"docs":{"4":{"tf":1.0}},"df":1}},"i":{"docs":{},"df":0,"c":{"docs":{"11":{"tf":1.7320508075688772}},"df":1}}},"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"a":{"docs":{"0":{"tf":1.0},"12":{"tf":1.0},"17":{"tf":1.0},"8":{"tf":1.4142135623730951}},"df":4}}}}},"f":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"1":{"tf":1.4142135623730951},"13":{"tf":1.0}},"df":2,"i":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0},"4":{"tf":1.0},"8":{"tf":1.0}},"df":3}}}}},"g":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"d":{"docs":{},"df":0,"i":{"docs":{"16":{"tf":1.0}},"df":1}}}}},"h":{"docs":{},"df":0,"o":{"docs":{},"df":0,"m":{"docs":{},"df":0,"o":{"docs":{},"df":0,"g":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{"16":{"tf":1.0}},"df":1}}}}}}},"s":{"docs":{},"df":0,"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"5":{"tf":1.0}},"df":1}}}},"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"d":{"docs":{"13":{"tf":1.0}},"df":1}}}}},"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{"1":{"tf":1.0},"9":{"tf":1.0}},"df":2}}},"n":{"docs":{"0":{"tf":1.0}},"df":1},"p":{"docs":{},"df":0,"o":{"docs":{},"df":0,"l":{"docs":{"11":{"tf":1.0}},"df":1}}},"r":{"docs":{},"df":0,"u":{"docs":{},"df":0,"p":{"docs":{},"df":0,"t":{"docs":{"22":{"tf":1.0}},"df":1}}}},"v":{"docs":{"1":{"tf":1.0}},"df":1}}},"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"d":{"docs":{},"df":0,"u":{"docs":{},"df":0,"c":{"docs":{"0":{"tf":1.0}},"df":1,"t":{"docs":{"0":{"tf":1.7320508075688772}},"df":1}}}}}}},"v":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{"0":{"tf":1.0},"18":{"tf":1.0},"19":{"tf":1.0},"9":{"tf":1.0}},"df":4}}},"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"s":{"docs":{"4":{"tf":1.0}},"df":1}}},"o":{"docs":{},"df":0,"c":{"docs":{"19":{"tf":1.4142135623730951}},"df":1},"l":{"docs":{},"df":0,"u":{"docs":{},"df":0,"t":{"docs":{"1":{"tf":1.0}},"df":1}}}}}},"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"8":{"tf":1.0}},"df":1}},"s":{"docs":{},"df":0,"e":{"docs":{},"df":0,"l":{"docs":{},"df":0,"f":{"docs":{"0":{"tf":1.4142135623730951},"1":{"tf":1.0},"12":{"tf":1.0}},"df":3}}}}}},"j":{"docs":{"3":{"tf":1.0},"4":{"tf":1.0}},"df":2,"o":{"docs":{},"df":0,"b":{"docs":{"19":{"tf":1.0},"22":{"tf":1.0}},"df":2}},"s":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{"21":{"tf":1.0}},"df":1}}}},"k":{"docs":{},"df":0,"e":{"docs":{},"df":0,"e":{"docs":{},"df":0,"p":{"docs":{"0":{"tf":1.0},"3":{"tf":1.0}},"df":2}},"r":{"docs":{},"df":0,"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,"l":{"docs":{"13":{"tf":1.0},"16":{"tf":1.4142135623730951}},"df":2}}}},"y":{"docs":{"20":{"tf":1.7320508075688772},"22":{"tf":1.0}},"df":2}},"n":{"docs":{},"df":0,"o":{"docs":{},"df":0,"w":{"docs":{"1":{"tf":1.0}},"df":1}}}},"l":{"docs":{"16":{"tf":2.0},"19":{"tf":1.0},"2":{"tf":1.4142135623730951},"3":{"tf":1.0},"4":{"tf":1.0}},"df":5,"a":{"docs":{},"df":0,"b":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{"0":{"tf":1.0}},"df":1}}}}}}}},"d":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"12":{"tf":1.0},"17":{"tf":1.0}},"df":2}}}},"p":{"docs":{},"df":0,"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"i":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{"0":{"tf":1.0}},"df":1}}}}}}},"r":{"docs":{},"df":0,"g":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"8":{"tf":1.0}},"df":1}}}},"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"1":{"tf":1.0}},"df":1}},"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{"11":{"tf":1.0}},"df":1}}}},"w":{"docs":{"12":{"tf":1.0}},"df":1},"y":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"0":{"tf":1.4142135623730951}},"df":1}},"o":{"docs":{},"df":0,"u":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.7320508075688772},"1":{"tf":2.23606797749979},"2":{"tf":1.0},"9":{"tf":1.4142135623730951}},"df":4}}}}},"d":{"docs":{},"df":0,"l":{"docs":{"0":{"tf":1.0},"12":{"tf":1.0},"4":{"tf":1.0},"8":{"tf":1.0}},"df":4}},"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"d":{"docs":{"15":{"tf":1.0}},"df":1},"k":{"docs":{"3":{"tf":1.0}},"df":1}},"f":{"docs":{},"df":0,"t":{"docs":{"1":{"tf":1.0}},"df":1}},"n":{"docs":{},"df":0,"g":{"docs":{},"df":0,"t":{"docs":{},"df":0,"h":{"docs":{"0":{"tf":2.0},"10":{"tf":2.23606797749979},"11":{"tf":1.4142135623730951},"12":{"tf":1.4142135623730951},"13":{"tf":1.0},"14":{"tf":1.0},"18":{"tf":2.0},"19":{"tf":2.0},"22":{"tf":1.0},"4":{"tf":1.0},"7":{"tf":1.0},"9":{"tf":1.4142135623730951}},"df":12}}}},"s":{"docs":{},"df":0,"s":{"docs":{"3":{"tf":1.0}},"df":1}},"t":{"docs":{"4":{"tf":1.0}},"df":1},"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"l":{"docs":{"12":{"tf":1.4142135623730951},"17":{"tf":1.0},"20":{"tf":1.0},"4":{"tf":1.4142135623730951},"7":{"tf":1.0}},"df":5}}}},"i":{"docs":{},"df":0,"b":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{"0":{"tf":1.0}},"df":1}}}}},"n":{"docs":{},"df":0,"e":{"docs":{"0":{"tf":1.4142135623730951},"18":{"tf":1.7320508075688772},"19":{"tf":1.0},"20":{"tf":1.7320508075688772},"21":{"tf":1.0},"22":{"tf":1.0},"9":{"tf":1.0}},"df":7,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{"4":{"tf":1.0}},"df":1}}}}}},"s":{"docs":{},"df":0,"t":{"docs":{"21":{"tf":1.0},"5":{"tf":1.0}},"df":2}},"v":{"docs":{},"df":0,"e":{"docs":{"0":{"tf":1.0},"3":{"tf":1.4142135623730951}},"df":2}}},"o":{"docs":{},"df":0,"c":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{"10":{"tf":1.0}},"df":1}}},"g":{"docs":{"22":{"tf":1.0}},"df":1},"s":{"docs":{},"df":0,"e":{"docs":{"12":{"tf":1.4142135623730951}},"df":1}},"t":{"docs":{"1":{"tf":1.0}},"df":1},"w":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"12":{"tf":1.4142135623730951},"4":{"tf":1.0},"8":{"tf":1.0}},"df":3}}}}},"m":{"docs":{"1":{"tf":1.0},"4":{"tf":1.0}},"df":2,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"h":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{"3":{"tf":1.0},"9":{"tf":1.0}},"df":2}}}}}}},"i":{"docs":{},"df":0,"n":{"docs":{"1":{"tf":1.0},"12":{"tf":1.0},"16":{"tf":1.0},"3":{"tf":1.0},"7":{"tf":1.0},"9":{"tf":1.0}},"df":6}},"j":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{"4":{"tf":1.0}},"df":1}}},"k":{"docs":{},"df":0,"e":{"docs":{"4":{"tf":1.0}},"df":1}},"l":{"docs":{},"df":0,"f":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"m":{"docs":{"20":{"tf":1.0}},"df":1}}}}},"p":{"docs":{"1":{"tf":1.0}},"df":1},"r":{"docs":{},"df":0,"g":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"16":{"tf":1.0}},"df":1}}}},"s":{"docs":{},"df":0,"s":{"docs":{"16":{"tf":1.0}},"df":1}},"t":{"docs":{},"df":0,"c":{"docs":{},"df":0,"h":{"docs":{"16":{"tf":1.4142135623730951}},"df":1}},"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"x":{"docs":{"2":{"tf":1.0},"21":{"tf":1.0},"3":{"tf":1.0},"4":{"tf":1.0},"5":{"tf":1.0}},"df":5}}}}},"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"g":{"docs":{"10":{"tf":1.0}},"df":1}}}}},"s":{"docs":{},"df":0,"s":{"docs":{},"df":0,"a":{"docs":{},"df":0,"g":{"docs":{"20":{"tf":1.0}},"df":1}}}}},"i":{"docs":{},"df":0,"d":{"docs":{},"df":0,"p":{"docs":{},"df":0,"o":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"8":{"tf":1.0}},"df":1}}}}}},"s":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"c":{"docs":{},"df":0,"h":{"docs":{"16":{"tf":1.0}},"df":1}}}}},"s":{"docs":{"0":{"tf":1.0}},"df":1}},"x":{"docs":{"3":{"tf":1.0}},"df":1}},"o":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{"0":{"tf":1.4142135623730951},"13":{"tf":2.23606797749979},"15":{"tf":1.0},"16":{"tf":1.4142135623730951},"18":{"tf":1.4142135623730951},"3":{"tf":1.0},"4":{"tf":1.4142135623730951}},"df":7,"l":{"docs":{"1":{"tf":1.0}},"df":1}},"u":{"docs":{},"df":0,"l":{"docs":{"1":{"tf":1.4142135623730951},"10":{"tf":1.0},"14":{"tf":1.0},"2":{"tf":1.0},"6":{"tf":1.0}},"df":5}}},"n":{"docs":{},"df":0,"o":{"docs":{},"df":0,"t":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{"12":{"tf":1.4142135623730951}},"df":1}}}}},"v":{"docs":{},"df":0,"e":{"docs":{"22":{"tf":1.0}},"df":1}}},"u":{"docs":{},"df":0,"1":{"docs":{"16":{"tf":1.0}},"df":1},"l":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"p":{"docs":{},"df":0,"l":{"docs":{"13":{"tf":1.0}},"df":1}}}}}}},"n":{"docs":{"1":{"tf":2.0},"10":{"tf":1.0},"11":{"tf":1.0},"12":{"tf":1.0},"19":{"tf":1.4142135623730951},"22":{"tf":1.0}},"df":6,"*":{"docs":{},"df":0,"(":{"docs":{},"df":0,"2":{"docs":{},"df":0,"ℓ":{"docs":{},"df":0,")":{"docs":{},"df":0,"/":{"docs":{},"df":0,"2":{"docs":{"1":{"tf":1.4142135623730951}},"df":1}}}}}}},"/":{"docs":{},"df":0,"m":{"docs":{"22":{"tf":1.0}},"df":1}},"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{"0":{"tf":1.0},"10":{"tf":1.0}},"df":2}},"e":{"docs":{},"df":0,"d":{"docs":{"0":{"tf":1.0},"16":{"tf":1.0},"4":{"tf":1.0}},"df":3}},"i":{"docs":{},"df":0,"g":{"docs":{},"df":0,"h":{"docs":{},"df":0,"b":{"docs":{},"df":0,"o":{"docs":{},"df":0,"u":{"docs":{},"df":0,"r":{"docs":{"9":{"tf":1.0}},"df":1}}}}}}},"u":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"n":{"docs":{"0":{"tf":1.7320508075688772},"1":{"tf":1.0},"3":{"tf":1.0},"4":{"tf":1.0},"8":{"tf":1.4142135623730951}},"df":5}}}}},"w":{"docs":{"0":{"tf":1.4142135623730951},"10":{"tf":1.0}},"df":2,"b":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"n":{"docs":{"14":{"tf":1.0}},"df":1}}}}},"x":{"docs":{},"df":0,"t":{"docs":{"1":{"tf":1.0},"13":{"tf":1.0}},"df":2}}},"o":{"docs":{},"df":0,"n":{"docs":{"0":{"tf":1.0}},"df":1,"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{"17":{"tf":1.0}},"df":1}}}}}},"z":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{"13":{"tf":1.0},"18":{"tf":1.0}},"df":2}}}}},"r":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{"13":{"tf":1.0},"16":{"tf":1.0}},"df":2}}}}},"u":{"docs":{},"df":0,"m":{"docs":{"7":{"tf":1.4142135623730951},"9":{"tf":1.4142135623730951}},"df":2,"b":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"0":{"tf":1.4142135623730951},"1":{"tf":1.0},"15":{"tf":1.0},"7":{"tf":1.0}},"df":4}}},"e":{"docs":{},"df":0,"r":{"docs":{"0":{"tf":1.0},"20":{"tf":1.0},"7":{"tf":1.7320508075688772},"9":{"tf":1.4142135623730951}},"df":4,"i":{"docs":{},"df":0,"c":{"docs":{},"df":0,"s":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"f":{"docs":{},"df":0,"a":{"docs":{},"df":0,"u":{"docs":{},"df":0,"l":{"docs":{},"df":0,"t":{"docs":{"7":{"tf":1.0},"9":{"tf":1.0}},"df":2}}}}}}}}}}}}}}}},"x":{"docs":{"19":{"tf":1.0},"7":{"tf":1.0}},"df":2},"y":{"docs":{"19":{"tf":1.0},"20":{"tf":1.0},"4":{"tf":1.4142135623730951},"7":{"tf":1.7320508075688772},"9":{"tf":1.0}},"df":5}},"o":{"docs":{"0":{"tf":1.0},"10":{"tf":1.0},"14":{"tf":1.0},"17":{"tf":1.0}},"df":4,"b":{"docs":{},"df":0,"e":{"docs":{},"df":0,"y":{"docs":{"1":{"tf":1.0},"14":{"tf":1.0}},"df":2}},"v":{"docs":{},"df":0,"i":{"docs":{},"df":0,"o":{"docs":{},"df":0,"u":{"docs":{"3":{"tf":1.0}},"df":1}}}}},"d":{"docs":{},"df":0,"d":{"docs":{"1":{"tf":1.4142135623730951},"16":{"tf":1.4142135623730951}},"df":2}},"f":{"docs":{},"df":0,"f":{"docs":{},"df":0,"s":{"docs":{},"df":0,"e":{"docs":{},"df":0,"t":{"docs":{"11":{"tf":1.0},"12":{"tf":1.0},"4":{"tf":1.0}},"df":3}}}}},"n":{"docs":{"0":{"tf":1.4142135623730951},"1":{"tf":1.4142135623730951},"11":{"tf":1.4142135623730951},"18":{"tf":1.0},"4":{"tf":1.0},"8":{"tf":1.0},"9":{"tf":1.4142135623730951}},"df":7,"c":{"docs":{"8":{"tf":1.4142135623730951}},"df":1}},"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{"0":{"tf":1.0}},"df":1},"r":{"docs":{"0":{"tf":1.4142135623730951},"1":{"tf":2.0},"11":{"tf":1.0},"12":{"tf":1.0},"13":{"tf":1.4142135623730951},"16":{"tf":1.4142135623730951},"21":{"tf":1.0},"3":{"tf":1.0},"5":{"tf":1.7320508075688772},"8":{"tf":1.4142135623730951}},"df":10}}},"r":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"16":{"tf":1.0},"17":{"tf":1.4142135623730951},"3":{"tf":1.0}},"df":3}}},"i":{"docs":{},"df":0,"g":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"16":{"tf":1.4142135623730951}},"df":1}}}}},"u":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0},"20":{"tf":1.0}},"df":2,">":{"docs":{},"df":0,".":{"docs":{},"df":0,"c":{"docs":{},"df":0,"s":{"docs":{},"df":0,"v":{"docs":{"21":{"tf":1.0}},"df":1}}},"j":{"docs":{},"df":0,"s":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{"21":{"tf":1.0}},"df":1}}}}}},"g":{"docs":{},"df":0,"o":{"docs":{"13":{"tf":1.0}},"df":1}},"p":{"docs":{},"df":0,"u":{"docs":{},"df":0,"t":{"docs":{"21":{"tf":1.7320508075688772},"22":{"tf":1.0}},"df":2}}}}},"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"12":{"tf":1.0},"16":{"tf":1.4142135623730951},"18":{"tf":1.0},"8":{"tf":1.0},"9":{"tf":1.0}},"df":5,"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{"22":{"tf":1.0}},"df":1}}},"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"d":{"docs":{"20":{"tf":1.0}},"df":1,"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{"20":{"tf":1.0}},"df":1}}}}}}}}}},"p":{"docs":{"1":{"tf":1.0}},"df":1,"a":{"docs":{},"df":0,"i":{"docs":{},"df":0,"r":{"docs":{"8":{"tf":1.0}},"df":1}},"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"l":{"docs":{"18":{"tf":1.0},"22":{"tf":1.0}},"df":2}}}},"m":{"docs":{},"df":0,"e":{"docs":{},"df":0,"t":{"docs":{"20":{"tf":1.0},"22":{"tf":1.0}},"df":2,"r":{"docs":{"0":{"tf":1.0}},"df":1}}}}},"i":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{"1":{"tf":1.4142135623730951},"13":{"tf":1.0},"8":{"tf":1.0}},"df":3},"y":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{"1":{"tf":1.4142135623730951}},"df":1}}}}}},"t":{"docs":{"12":{"tf":1.0}},"df":1,"i":{"docs":{},"df":0,"t":{"docs":{"1":{"tf":1.0}},"df":1}}}},"s":{"docs":{},"df":0,"s":{"docs":{"0":{"tf":1.0}},"df":1,"/":{"docs":{},"df":0,"f":{"docs":{},"df":0,"a":{"docs":{},"df":0,"i":{"docs":{},"df":0,"l":{"docs":{"9":{"tf":1.0}},"df":1}}}}}},"t":{"docs":{"14":{"tf":1.0}},"df":1}},"t":{"docs":{},"df":0,"h":{"docs":{"21":{"tf":1.0},"5":{"tf":1.0}},"df":2}},"y":{"docs":{},"df":0,"o":{"docs":{},"df":0,"f":{"docs":{},"df":0,"f":{"docs":{"3":{"tf":1.0}},"df":1}}}}},"e":{"docs":{},"df":0,"e":{"docs":{},"df":0,"l":{"docs":{"10":{"tf":1.0}},"df":1}},"r":{"docs":{"22":{"tf":1.0},"9":{"tf":1.0}},"df":2,"c":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"17":{"tf":1.0}},"df":1}}}},"t":{"docs":{},"df":0,"u":{"docs":{},"df":0,"r":{"docs":{},"df":0,"b":{"docs":{"0":{"tf":1.0},"13":{"tf":1.0},"14":{"tf":1.0},"17":{"tf":1.0}},"df":4}}}}}},"h":{"docs":{},"df":0,"y":{"docs":{},"df":0,"s":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{"6":{"tf":1.0}},"df":1}}}}},"i":{"docs":{"16":{"tf":1.0}},"df":1,"n":{"docs":{"1":{"tf":1.0}},"df":1},"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"0":{"tf":1.0},"13":{"tf":1.0},"15":{"tf":1.0},"18":{"tf":1.0}},"df":4}}}}}},"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{"0":{"tf":1.0}},"df":1}}},"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"u":{"docs":{"16":{"tf":1.4142135623730951}},"df":1}}}}}},"o":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"10":{"tf":1.0},"21":{"tf":1.0},"4":{"tf":1.0}},"df":3}}},"o":{"docs":{},"df":0,"l":{"docs":{"22":{"tf":1.0}},"df":1}},"s":{"docs":{},"df":0,"s":{"docs":{},"df":0,"i":{"docs":{},"df":0,"b":{"docs":{},"df":0,"l":{"docs":{"4":{"tf":1.0}},"df":1}}}}},"w":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"9":{"tf":1.0}},"df":1}}}},"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"d":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{"12":{"tf":1.7320508075688772}},"df":1}}},"s":{"docs":{},"df":0,"c":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"b":{"docs":{"4":{"tf":1.0}},"df":1}}}}}},"i":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{"12":{"tf":1.0}},"df":1}}}},"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,"l":{"docs":{},"df":0,"n":{"docs":{},"df":0,"!":{"docs":{},"df":0,"(":{"docs":{},"df":0,"\\"":{"docs":{},"df":0,"m":{"docs":{"7":{"tf":1.0}},"df":1}}}}}}}}},"o":{"docs":{},"df":0,"b":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"m":{"docs":{"10":{"tf":1.0},"16":{"tf":1.4142135623730951},"17":{"tf":1.0},"4":{"tf":1.0}},"df":4}}}},"d":{"docs":{},"df":0,"u":{"docs":{},"df":0,"c":{"docs":{"22":{"tf":1.0}},"df":1,"t":{"docs":{"12":{"tf":1.0},"17":{"tf":1.0}},"df":2}}}},"f":{"docs":{},"df":0,"i":{"docs":{},"df":0,"l":{"docs":{"1":{"tf":1.0},"13":{"tf":1.0},"16":{"tf":1.4142135623730951},"3":{"tf":1.0}},"df":4}}},"v":{"docs":{},"df":0,"i":{"docs":{},"df":0,"d":{"docs":{"0":{"tf":1.0}},"df":1}}}}},"u":{"docs":{},"df":0,"r":{"docs":{},"df":0,"p":{"docs":{},"df":0,"o":{"docs":{},"df":0,"s":{"docs":{"18":{"tf":1.0}},"df":1}}}}}},"q":{"docs":{},"df":0,"u":{"docs":{},"df":0,"a":{"docs":{},"df":0,"d":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{"17":{"tf":1.0}},"df":1}}}},"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{"13":{"tf":1.0}},"df":1}}}},"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{"0":{"tf":1.0},"1":{"tf":1.0}},"df":2}}}}}},"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{"6":{"tf":1.0}},"df":1}}}}}},"i":{"docs":{},"df":0,"c":{"docs":{},"df":0,"k":{"docs":{"19":{"tf":1.0},"7":{"tf":1.4142135623730951}},"df":2}}}}},"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"g":{"docs":{"18":{"tf":1.0},"20":{"tf":1.0}},"df":2}},"t":{"docs":{},"df":0,"e":{"docs":{"22":{"tf":1.0}},"df":1},"i":{"docs":{},"df":0,"o":{"docs":{"4":{"tf":1.0}},"df":1}}}},"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"d":{"docs":{"8":{"tf":1.0}},"df":1}}}},"f":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"7":{"tf":1.0},"8":{"tf":1.0}},"df":2}},"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0},"3":{"tf":1.4142135623730951}},"df":2}}}},"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"m":{"docs":{},"df":0,"u":{"docs":{},"df":0,"l":{"docs":{"16":{"tf":1.0}},"df":1}}}}}},"g":{"docs":{},"df":0,"i":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{"16":{"tf":1.0}},"df":1}}}},"l":{"docs":{"11":{"tf":1.0},"12":{"tf":1.0},"15":{"tf":1.0}},"df":3,"i":{"docs":{},"df":0,"a":{"docs":{},"df":0,"b":{"docs":{},"df":0,"l":{"docs":{"6":{"tf":1.0}},"df":1}}}}},"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"4":{"tf":1.0}},"df":1,"d":{"docs":{"17":{"tf":1.4142135623730951}},"df":1}}}}},"n":{"docs":{},"df":0,"a":{"docs":{},"df":0,"m":{"docs":{"22":{"tf":1.0}},"df":1}}},"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{"12":{"tf":1.0},"9":{"tf":1.0}},"df":2}}},"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0},"12":{"tf":1.0},"15":{"tf":1.0},"16":{"tf":1.4142135623730951},"7":{"tf":1.0},"8":{"tf":1.0},"9":{"tf":1.4142135623730951}},"df":7,".":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,"_":{"docs":{},"df":0,"s":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{},"df":0,"w":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{},"df":0,"h":{"docs":{},"df":0,"_":{"docs":{},"df":0,"o":{"docs":{},"df":0,"k":{"docs":{"9":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}},"e":{"docs":{},"df":0,"i":{"docs":{},"df":0,"g":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"v":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"u":{"docs":{"7":{"tf":1.0}},"df":1}}}}}}}}}}}}}},"s":{"docs":{},"df":0,"i":{"docs":{},"df":0,"d":{"docs":{},"df":0,"u":{"docs":{"13":{"tf":1.0},"16":{"tf":1.0},"8":{"tf":1.0}},"df":3}}},"o":{"docs":{},"df":0,"l":{"docs":{},"df":0,"u":{"docs":{},"df":0,"t":{"docs":{"11":{"tf":1.0},"7":{"tf":1.0}},"df":2}}}},"u":{"docs":{},"df":0,"l":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0},"21":{"tf":1.0},"22":{"tf":1.4142135623730951}},"df":3}},"m":{"docs":{"19":{"tf":1.0},"22":{"tf":1.0}},"df":2}}},"u":{"docs":{},"df":0,"s":{"docs":{"22":{"tf":1.0}},"df":1}}},"i":{"docs":{},"df":0,"c":{"docs":{},"df":0,"h":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"d":{"docs":{},"df":0,"s":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{"12":{"tf":1.0},"8":{"tf":1.0}},"df":2}}}}}}}},"g":{"docs":{},"df":0,"h":{"docs":{},"df":0,"t":{"docs":{"1":{"tf":1.0}},"df":1}}}},"o":{"docs":{},"df":0,"o":{"docs":{},"df":0,"t":{"docs":{"12":{"tf":1.0}},"df":1}},"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"21":{"tf":1.0},"3":{"tf":1.0}},"df":2}}},"w":{"docs":{"21":{"tf":1.0},"5":{"tf":1.0}},"df":2}},"u":{"docs":{},"df":0,"n":{"docs":{"18":{"tf":1.0},"22":{"tf":1.4142135623730951},"9":{"tf":1.0}},"df":3,".":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"f":{"docs":{"20":{"tf":1.4142135623730951}},"df":1}}}}},"n":{"docs":{},"df":0,"a":{"docs":{},"df":0,"b":{"docs":{},"df":0,"l":{"docs":{"0":{"tf":1.0}},"df":1}}}}}}},"s":{"docs":{},"df":0,"a":{"docs":{},"df":0,"m":{"docs":{},"df":0,"e":{"docs":{"15":{"tf":1.0},"22":{"tf":1.0},"8":{"tf":1.0},"9":{"tf":1.0}},"df":4},"p":{"docs":{},"df":0,"l":{"docs":{"11":{"tf":1.0},"3":{"tf":1.0}},"df":2}}},"n":{"docs":{},"df":0,"d":{"docs":{},"df":0,"w":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{},"df":0,"h":{"docs":{"1":{"tf":1.0},"9":{"tf":1.0}},"df":2}}}}}},"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"s":{"docs":{},"df":0,"f":{"docs":{},"df":0,"i":{"docs":{"4":{"tf":1.0}},"df":1}}}}}},"c":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{"17":{"tf":1.0},"4":{"tf":1.0}},"df":2}}},"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{"13":{"tf":1.0},"8":{"tf":1.0}},"df":2}}}},"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"16":{"tf":1.0},"3":{"tf":1.4142135623730951}},"df":2}}},"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{"1":{"tf":1.4142135623730951},"16":{"tf":1.0}},"df":2}}}}},"e":{"docs":{},"df":0,"d":{"docs":{"13":{"tf":1.0},"22":{"tf":1.0}},"df":2}},"r":{"docs":{},"df":0,"i":{"docs":{"16":{"tf":1.0}},"df":1}},"t":{"docs":{"10":{"tf":1.0},"22":{"tf":1.4142135623730951},"9":{"tf":1.0}},"df":3},"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"0":{"tf":1.0}},"df":1}}}},"h":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"l":{"docs":{},"df":0,"o":{"docs":{},"df":0,"w":{"docs":{"12":{"tf":1.0}},"df":1}}}}},"i":{"docs":{},"df":0,"f":{"docs":{},"df":0,"t":{"docs":{"4":{"tf":1.7320508075688772}},"df":1}}},"u":{"docs":{},"df":0,"t":{"docs":{"16":{"tf":1.0}},"df":1}}},"i":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{"0":{"tf":1.0},"1":{"tf":1.4142135623730951},"8":{"tf":1.0},"9":{"tf":1.0}},"df":4}},"g":{"docs":{},"df":0,"n":{"docs":{"11":{"tf":1.0},"3":{"tf":1.0},"8":{"tf":1.0}},"df":3,"i":{"docs":{},"df":0,"f":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{"21":{"tf":1.0}},"df":1}}}}}},"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0},"8":{"tf":1.0}},"df":2}}}},"n":{"docs":{},"df":0,"(":{"docs":{},"df":0,"√":{"docs":{},"df":0,"e":{"docs":{},"df":0,"_":{"docs":{},"df":0,"m":{"docs":{"3":{"tf":1.0}},"df":1}}}}},"g":{"docs":{},"df":0,"u":{"docs":{},"df":0,"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{"15":{"tf":1.0}},"df":1}}}}}},"t":{"docs":{"1":{"tf":1.0},"10":{"tf":1.0},"6":{"tf":1.0},"9":{"tf":1.0}},"df":4},"x":{"docs":{"18":{"tf":1.0}},"df":1},"z":{"docs":{},"df":0,"e":{"docs":{"22":{"tf":1.0}},"df":1}}},"k":{"docs":{},"df":0,"i":{"docs":{},"df":0,"p":{"docs":{"8":{"tf":1.0}},"df":1}}},"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"l":{"docs":{"4":{"tf":1.0}},"df":1,"e":{"docs":{},"df":0,"r":{"docs":{"8":{"tf":1.0}},"df":1}}}}},"o":{"docs":{},"df":0,"o":{"docs":{},"df":0,"t":{"docs":{},"df":0,"h":{"docs":{"11":{"tf":1.4142135623730951}},"df":1,"l":{"docs":{},"df":0,"i":{"docs":{"16":{"tf":1.0}},"df":1}}}}}}},"o":{"docs":{},"df":0,"l":{"docs":{},"df":0,"u":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0},"13":{"tf":1.0}},"df":2}},"v":{"docs":{"16":{"tf":1.4142135623730951},"17":{"tf":1.0}},"df":2,"a":{"docs":{},"df":0,"b":{"docs":{},"df":0,"l":{"docs":{"0":{"tf":1.0},"16":{"tf":1.0}},"df":2}}},"e":{"docs":{},"df":0,"r":{"docs":{"20":{"tf":1.0},"8":{"tf":1.0}},"df":2}}}}},"p":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{"16":{"tf":1.0}},"df":1},"r":{"docs":{},"df":0,"s":{"docs":{"2":{"tf":1.0}},"df":1}}},"e":{"docs":{},"df":0,"c":{"docs":{"1":{"tf":1.0},"3":{"tf":1.0},"7":{"tf":1.0}},"df":3,".":{"docs":{},"df":0,"b":{"docs":{},"df":0,"o":{"docs":{},"df":0,"t":{"docs":{},"df":0,"t":{"docs":{},"df":0,"o":{"docs":{},"df":0,"m":{"docs":{},"df":0,"_":{"docs":{},"df":0,"d":{"docs":{},"df":0,"i":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{},"df":0,"h":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"t":{"docs":{},"df":0,"(":{"docs":{},"df":0,"0":{"docs":{},"df":0,".":{"docs":{},"df":0,"0":{"docs":{"1":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}},"t":{"docs":{},"df":0,"o":{"docs":{},"df":0,"p":{"docs":{},"df":0,"_":{"docs":{},"df":0,"d":{"docs":{},"df":0,"i":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{},"df":0,"h":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"t":{"docs":{},"df":0,"(":{"docs":{},"df":0,"0":{"docs":{},"df":0,".":{"docs":{},"df":0,"0":{"docs":{"1":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}},"t":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{"18":{"tf":1.0},"6":{"tf":1.7320508075688772},"7":{"tf":1.0},"8":{"tf":1.0},"9":{"tf":1.0}},"df":5,"l":{"docs":{"1":{"tf":1.0}},"df":1}},"u":{"docs":{},"df":0,"m":{"docs":{"0":{"tf":1.4142135623730951},"1":{"tf":1.0},"10":{"tf":1.0},"18":{"tf":1.4142135623730951},"19":{"tf":1.4142135623730951},"20":{"tf":1.4142135623730951},"6":{"tf":1.0},"9":{"tf":1.4142135623730951}},"df":8}}}}}},"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{"1":{"tf":1.0}},"df":1}}}},"q":{"docs":{},"df":0,"u":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{"12":{"tf":1.0},"17":{"tf":1.0}},"df":2}}}},"t":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"t":{"docs":{"19":{"tf":1.0},"7":{"tf":1.4142135623730951}},"df":2}},"t":{"docs":{},"df":0,"e":{"docs":{"1":{"tf":1.4142135623730951}},"df":1}}},"d":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"f":{"docs":{},"df":0,"6":{"docs":{},"df":0,"4":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{},"df":0,"s":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"p":{"docs":{},"df":0,"i":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"a":{"docs":{},"df":0,"b":{"docs":{"16":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}},"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"c":{"docs":{},"df":0,"i":{"docs":{},"df":0,"l":{"docs":{"4":{"tf":1.0}},"df":1}}}},"p":{"docs":{"11":{"tf":1.0},"19":{"tf":1.0},"4":{"tf":1.0}},"df":3}},"o":{"docs":{},"df":0,"p":{"docs":{"22":{"tf":1.0}},"df":1},"r":{"docs":{},"df":0,"e":{"docs":{"22":{"tf":1.0}},"df":1}}},"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"20":{"tf":1.0}},"df":1}},"p":{"docs":{"0":{"tf":1.4142135623730951},"1":{"tf":1.4142135623730951},"19":{"tf":1.0},"2":{"tf":1.0},"4":{"tf":1.7320508075688772},"8":{"tf":1.0}},"df":6}},"u":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{},"df":0,"u":{"docs":{},"df":0,"r":{"docs":{"1":{"tf":1.0}},"df":1}}}}}},"u":{"docs":{},"df":0,"d":{"docs":{},"df":0,"i":{"docs":{"0":{"tf":1.0}},"df":1}}}},"u":{"docs":{},"df":0,"b":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"m":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"18":{"tf":1.0},"9":{"tf":1.0}},"df":2}}}}}}},"t":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{"11":{"tf":1.0}},"df":1}}}}}},"c":{"docs":{},"df":0,"c":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"s":{"docs":{"20":{"tf":1.0}},"df":1}}}}},"i":{"docs":{},"df":0,"t":{"docs":{"18":{"tf":1.0},"19":{"tf":1.0},"8":{"tf":1.0}},"df":3}},"r":{"docs":{},"df":0,"v":{"docs":{},"df":0,"i":{"docs":{},"df":0,"v":{"docs":{"1":{"tf":1.0}},"df":1}}}}},"w":{"docs":{},"df":0,"e":{"docs":{},"df":0,"e":{"docs":{},"df":0,"p":{"docs":{"0":{"tf":1.0},"15":{"tf":1.0},"17":{"tf":1.7320508075688772},"18":{"tf":1.4142135623730951},"19":{"tf":1.4142135623730951},"22":{"tf":1.7320508075688772}},"df":6}}},"i":{"docs":{},"df":0,"t":{"docs":{},"df":0,"c":{"docs":{},"df":0,"h":{"docs":{"0":{"tf":1.0}},"df":1}}}}},"y":{"docs":{},"df":0,"m":{"docs":{},"df":0,"m":{"docs":{},"df":0,"e":{"docs":{},"df":0,"t":{"docs":{},"df":0,"r":{"docs":{"0":{"tf":1.4142135623730951},"2":{"tf":1.0},"3":{"tf":1.4142135623730951}},"df":3,"i":{"docs":{"1":{"tf":1.4142135623730951}},"df":1}}}}}},"n":{"docs":{},"df":0,"c":{"docs":{"0":{"tf":1.0}},"df":1}}}},"t":{"docs":{"16":{"tf":1.0}},"df":1,"a":{"docs":{},"df":0,"g":{"docs":{"11":{"tf":1.0}},"df":1}},"e":{"docs":{},"df":0,"m":{"docs":{},"df":0,"p":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{"22":{"tf":1.0}},"df":1}}}}}}},"n":{"docs":{},"df":0,"d":{"docs":{"13":{"tf":1.0}},"df":1}},"r":{"docs":{},"df":0,"m":{"docs":{"0":{"tf":1.0},"16":{"tf":1.4142135623730951},"17":{"tf":1.0}},"df":3}},"s":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0}},"df":1}}},"h":{"docs":{"10":{"tf":1.0},"11":{"tf":1.0}},"df":2,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"f":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{"11":{"tf":1.0}},"df":1}}}}}},"i":{"docs":{},"df":0,"r":{"docs":{},"df":0,"d":{"docs":{"15":{"tf":1.0}},"df":1}}},"o":{"docs":{},"df":0,"u":{"docs":{},"df":0,"s":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"12":{"tf":1.0}},"df":1}}}}}},"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"d":{"docs":{"22":{"tf":1.0}},"df":1}},"e":{"docs":{"16":{"tf":1.0},"4":{"tf":1.0}},"df":2},"s":{"docs":{},"df":0,"h":{"docs":{},"df":0,"o":{"docs":{},"df":0,"l":{"docs":{},"df":0,"d":{"docs":{"0":{"tf":2.0},"1":{"tf":2.449489742783178},"10":{"tf":1.0},"11":{"tf":1.7320508075688772},"13":{"tf":2.0},"15":{"tf":1.0},"18":{"tf":1.7320508075688772},"3":{"tf":1.4142135623730951},"4":{"tf":1.4142135623730951},"6":{"tf":1.0}},"df":10,"_":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"g":{"docs":{},"df":0,"y":{"docs":{},"df":0,"(":{"docs":{},"df":0,"1":{"docs":{"1":{"tf":1.0}},"df":1}}}}}}}}}}}}}}},"o":{"docs":{},"df":0,"u":{"docs":{},"df":0,"g":{"docs":{},"df":0,"h":{"docs":{"13":{"tf":1.0},"15":{"tf":1.0},"18":{"tf":1.0},"19":{"tf":1.0},"3":{"tf":1.0}},"df":5}}}}}},"i":{"docs":{},"df":0,"m":{"docs":{},"df":0,"e":{"docs":{"0":{"tf":1.0}},"df":1}}},"o":{"docs":{},"df":0,"g":{"docs":{},"df":0,"e":{"docs":{},"df":0,"t":{"docs":{},"df":0,"h":{"docs":{"8":{"tf":1.0}},"df":1}}}},"o":{"docs":{},"df":0,"l":{"docs":{"5":{"tf":1.0}},"df":1}},"p":{"docs":{"0":{"tf":1.0},"1":{"tf":1.4142135623730951}},"df":2}},"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"e":{"docs":{"16":{"tf":1.4142135623730951},"4":{"tf":1.0}},"df":2}},"n":{"docs":{},"df":0,"s":{"docs":{},"df":0,"p":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{"0":{"tf":1.0},"11":{"tf":1.4142135623730951},"12":{"tf":1.0},"13":{"tf":1.0},"16":{"tf":1.0},"17":{"tf":1.0},"4":{"tf":1.4142135623730951}},"df":7}},"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"t":{"docs":{"16":{"tf":1.0}},"df":1}}}},"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"s":{"docs":{"0":{"tf":1.0},"1":{"tf":2.0},"11":{"tf":1.0},"13":{"tf":1.0},"3":{"tf":1.7320508075688772},"4":{"tf":1.0},"7":{"tf":1.0}},"df":7}}}}}}},"i":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{"17":{"tf":1.0}},"df":1}},"p":{"docs":{"21":{"tf":1.0}},"df":1}},"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"c":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0},"10":{"tf":1.0},"12":{"tf":1.0},"2":{"tf":1.0},"4":{"tf":1.4142135623730951},"7":{"tf":1.0},"8":{"tf":1.7320508075688772}},"df":7}}}},"s":{"docs":{},"df":0,"t":{"docs":{"17":{"tf":1.0}},"df":1}}}},"u":{"docs":{},"df":0,"r":{"docs":{},"df":0,"n":{"docs":{"0":{"tf":1.4142135623730951},"1":{"tf":2.0},"2":{"tf":1.0},"8":{"tf":1.0}},"df":4}}},"w":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{},"df":0,"e":{"docs":{"8":{"tf":1.0}},"df":1}},"s":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.4142135623730951},"1":{"tf":2.23606797749979},"19":{"tf":1.0},"9":{"tf":1.4142135623730951}},"df":4,"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"p":{"docs":{"0":{"tf":1.0},"18":{"tf":1.0},"19":{"tf":2.23606797749979},"20":{"tf":1.4142135623730951},"22":{"tf":1.0}},"df":5,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"c":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{},"df":0,"y":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"{":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,"_":{"docs":{},"df":0,"b":{"docs":{},"df":0,"e":{"docs":{},"df":0,"l":{"docs":{},"df":0,"o":{"docs":{},"df":0,"w":{"docs":{"12":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}}}},"d":{"docs":{},"df":0,"i":{"docs":{},"df":0,"s":{"docs":{},"df":0,"c":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"z":{"docs":{},"df":0,"e":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"{":{"docs":{},"df":0,"a":{"docs":{},"df":0,"s":{"docs":{},"df":0,"s":{"docs":{},"df":0,"e":{"docs":{},"df":0,"m":{"docs":{},"df":0,"b":{"docs":{},"df":0,"l":{"docs":{"3":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}},"m":{"docs":{},"df":0,"o":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"l":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"v":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{"12":{"tf":1.0}},"df":1}}}},"w":{"docs":{},"df":0,"a":{"docs":{},"df":0,"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"g":{"docs":{},"df":0,"u":{"docs":{},"df":0,"i":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{"3":{"tf":1.0},"7":{"tf":1.0}},"df":2}}}}}}}}}}}}},"{":{"docs":{},"df":0,"t":{"docs":{},"df":0,"h":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"h":{"docs":{},"df":0,"o":{"docs":{},"df":0,"l":{"docs":{},"df":0,"d":{"docs":{},"df":0,"_":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"g":{"docs":{},"df":0,"i":{"docs":{"1":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}}},"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"t":{"docs":{},"df":0,"u":{"docs":{},"df":0,"r":{"docs":{},"df":0,"b":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"{":{"docs":{},"df":0,"m":{"docs":{},"df":0,"u":{"docs":{},"df":0,"1":{"docs":{},"df":0,"_":{"docs":{},"df":0,"f":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"m":{"docs":{},"df":0,"_":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"p":{"docs":{},"df":0,"h":{"docs":{},"df":0,"a":{"docs":{"16":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}}}}}}}},"s":{"docs":{},"df":0,"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{},"df":0,"r":{"docs":{},"df":0,"u":{"docs":{},"df":0,"m":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"{":{"docs":{},"df":0,"d":{"docs":{},"df":0,"i":{"docs":{},"df":0,"s":{"docs":{},"df":0,"c":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"_":{"docs":{},"df":0,"s":{"docs":{},"df":0,"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{},"df":0,"r":{"docs":{},"df":0,"u":{"docs":{},"df":0,"m":{"docs":{"7":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}},"v":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"d":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"_":{"docs":{},"df":0,"b":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"k":{"docs":{},"df":0,"e":{"docs":{},"df":0,"t":{"docs":{"9":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}}}}}}}},"_":{"docs":{},"df":0,"c":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"h":{"docs":{},"df":0,"e":{"docs":{},"df":0,"_":{"docs":{},"df":0,"d":{"docs":{},"df":0,"i":{"docs":{},"df":0,"r":{"docs":{"22":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}},"o":{"docs":{"0":{"tf":1.7320508075688772},"1":{"tf":1.4142135623730951},"10":{"tf":1.0},"12":{"tf":1.0},"14":{"tf":1.0},"16":{"tf":1.0},"18":{"tf":1.0},"4":{"tf":1.4142135623730951},"8":{"tf":1.0},"9":{"tf":1.0}},"df":10}},"y":{"docs":{},"df":0,"p":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{"19":{"tf":1.4142135623730951}},"df":1}}}}},"u":{"docs":{"3":{"tf":1.4142135623730951}},"df":1,"n":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"0":{"tf":1.0},"17":{"tf":1.0},"8":{"tf":1.0}},"df":3}}},"k":{"docs":{},"df":0,"n":{"docs":{},"df":0,"o":{"docs":{},"df":0,"w":{"docs":{},"df":0,"n":{"docs":{"20":{"tf":1.0},"3":{"tf":1.4142135623730951}},"df":2}}}}}},"p":{"docs":{"3":{"tf":1.0},"4":{"tf":1.0}},"df":2,"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"4":{"tf":1.0},"8":{"tf":1.0}},"df":2}}}},"s":{"docs":{"1":{"tf":1.0},"12":{"tf":1.4142135623730951},"16":{"tf":1.0},"17":{"tf":1.0},"19":{"tf":1.0},"3":{"tf":1.4142135623730951},"4":{"tf":1.0},"7":{"tf":1.4142135623730951},"8":{"tf":1.0},"9":{"tf":1.0}},"df":10}},"v":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"d":{"docs":{"0":{"tf":1.0},"1":{"tf":1.0},"18":{"tf":1.0},"19":{"tf":1.0},"20":{"tf":1.0},"8":{"tf":1.0},"9":{"tf":1.7320508075688772}},"df":7,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"_":{"docs":{},"df":0,"b":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"k":{"docs":{},"df":0,"e":{"docs":{},"df":0,"t":{"docs":{"9":{"tf":1.0}},"df":1,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"g":{"docs":{},"df":0,"(":{"docs":{},"df":0,"1":{"docs":{},"df":0,".":{"docs":{},"df":0,"0":{"docs":{"9":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}},"u":{"docs":{"0":{"tf":1.0},"15":{"tf":1.0},"17":{"tf":1.0},"20":{"tf":1.4142135623730951},"21":{"tf":1.0},"5":{"tf":1.0}},"df":6}},"n":{"docs":{},"df":0,"i":{"docs":{},"df":0,"s":{"docs":{},"df":0,"h":{"docs":{"16":{"tf":1.0}},"df":1}}}},"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"a":{"docs":{},"df":0,"b":{"docs":{},"df":0,"l":{"docs":{"22":{"tf":1.0}},"df":1}},"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"t":{"docs":{},"df":0,"w":{"docs":{},"df":0,"i":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{"12":{"tf":1.4142135623730951}},"df":1}}}}}}}}}}}}},"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{"13":{"tf":1.0}},"df":1}}}},"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"f":{"docs":{},"df":0,"i":{"docs":{"1":{"tf":1.0}},"df":1}}},"s":{"docs":{},"df":0,"i":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{"22":{"tf":1.0}},"df":1}}}}}}},"w":{"docs":{},"df":0,"a":{"docs":{},"df":0,"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"g":{"docs":{},"df":0,"u":{"docs":{},"df":0,"i":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{"1":{"tf":1.4142135623730951}},"df":1,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"t":{"docs":{},"df":0,"w":{"docs":{},"df":0,"i":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"d":{"docs":{},"df":0,"(":{"docs":{},"df":0,"1":{"docs":{},"df":0,".":{"docs":{},"df":0,"0":{"docs":{"1":{"tf":1.0},"3":{"tf":1.0},"7":{"tf":1.0}},"df":3}}}}}}}}}}}}}}}}}}}}}}}},"y":{"docs":{"14":{"tf":1.0},"8":{"tf":1.0}},"df":2}},"e":{"docs":{},"df":0,"i":{"docs":{},"df":0,"g":{"docs":{},"df":0,"h":{"docs":{},"df":0,"t":{"docs":{"16":{"tf":1.0},"17":{"tf":1.0}},"df":2}}}},"l":{"docs":{},"df":0,"l":{"docs":{"16":{"tf":1.0}},"df":1}}},"h":{"docs":{},"df":0,"o":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{"13":{"tf":1.0},"18":{"tf":1.0}},"df":2,"s":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{"1":{"tf":1.0}},"df":1}}}}},"s":{"docs":{},"df":0,"e":{"docs":{"0":{"tf":1.4142135623730951},"15":{"tf":1.0}},"df":2}}}},"i":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"22":{"tf":1.0}},"df":1}}},"n":{"docs":{"20":{"tf":1.0}},"df":1,"d":{"docs":{},"df":0,"o":{"docs":{},"df":0,"w":{"docs":{"0":{"tf":1.7320508075688772},"1":{"tf":1.7320508075688772},"10":{"tf":2.0},"11":{"tf":1.0},"12":{"tf":1.0},"13":{"tf":1.0},"15":{"tf":1.0},"16":{"tf":1.0},"18":{"tf":1.7320508075688772},"19":{"tf":1.4142135623730951},"22":{"tf":1.0},"9":{"tf":1.4142135623730951}},"df":12}}}},"t":{"docs":{},"df":0,"h":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"1":{"tf":1.0}},"df":1}},"o":{"docs":{},"df":0,"u":{"docs":{},"df":0,"t":{"docs":{"22":{"tf":1.0}},"df":1}}}}}},"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"k":{"docs":{"1":{"tf":1.0},"3":{"tf":1.0}},"df":2},"s":{"docs":{},"df":0,"t":{"docs":{"10":{"tf":1.0}},"df":1}}}},"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{"1":{"tf":1.0},"22":{"tf":1.4142135623730951}},"df":2},"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{"21":{"tf":1.0}},"df":1}}}}}}},"x":{"docs":{"0":{"tf":2.6457513110645907},"1":{"tf":1.0},"16":{"tf":1.4142135623730951},"3":{"tf":1.4142135623730951},"4":{"tf":1.0}},"df":5},"z":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{"11":{"tf":1.4142135623730951},"16":{"tf":1.0},"4":{"tf":1.0}},"df":3}}}}}},"title":{"root":{"docs":{},"df":0,"1":{"docs":{"11":{"tf":1.0}},"df":1},"2":{"docs":{"12":{"tf":1.0}},"df":1},"a":{"docs":{},"df":0,"g":{"docs":{},"df":0,"a":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{"9":{"tf":1.0}},"df":1}}}}}},"s":{"docs":{},"df":0,"y":{"docs":{},"df":0,"m":{"docs":{},"df":0,"p":{"docs":{},"df":0,"t":{"docs":{},"df":0,"o":{"docs":{},"df":0,"t":{"docs":{"14":{"tf":1.0}},"df":1}}}}}}},"u":{"docs":{},"df":0,"x":{"docs":{},"df":0,"i":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{"9":{"tf":1.0}},"df":1}}}}}}}}},"b":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{"8":{"tf":1.0}},"df":1}},"i":{"docs":{},"df":0,"s":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"12":{"tf":1.0}},"df":1}}}}},"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"k":{"docs":{},"df":0,"e":{"docs":{},"df":0,"t":{"docs":{"6":{"tf":1.0}},"df":1}}}}}}},"c":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"h":{"docs":{"22":{"tf":1.0}},"df":1}}},"e":{"docs":{},"df":0,"l":{"docs":{},"df":0,"l":{"docs":{"3":{"tf":1.0}},"df":1}},"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"3":{"tf":1.0}},"df":1}}}}},"h":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"k":{"docs":{"17":{"tf":1.0}},"df":1}}}},"l":{"docs":{},"df":0,"o":{"docs":{},"df":0,"s":{"docs":{},"df":0,"u":{"docs":{},"df":0,"r":{"docs":{"3":{"tf":1.0}},"df":1}}}}},"o":{"docs":{},"df":0,"e":{"docs":{},"df":0,"f":{"docs":{},"df":0,"f":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{},"df":0,"i":{"docs":{"15":{"tf":1.0}},"df":1}}}}}},"m":{"docs":{},"df":0,"e":{"docs":{"8":{"tf":1.0}},"df":1},"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"18":{"tf":1.0}},"df":1}}}}},"n":{"docs":{},"df":0,"d":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{"4":{"tf":1.0}},"df":1}}},"f":{"docs":{},"df":0,"i":{"docs":{},"df":0,"g":{"docs":{},"df":0,"u":{"docs":{},"df":0,"r":{"docs":{"20":{"tf":1.0}},"df":1}}}}}},"r":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{"16":{"tf":1.0}},"df":1}}}}}}},"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"12":{"tf":1.0}},"df":1}}}},"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{"10":{"tf":1.0}},"df":1}}}},"o":{"docs":{},"df":0,"s":{"docs":{},"df":0,"s":{"docs":{"17":{"tf":1.0},"9":{"tf":1.0}},"df":2}}}},"u":{"docs":{},"df":0,"t":{"docs":{},"df":0,"o":{"docs":{},"df":0,"f":{"docs":{},"df":0,"f":{"docs":{"16":{"tf":1.0}},"df":1}}}}}},"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{"11":{"tf":1.0},"12":{"tf":1.0}},"df":2}}}},"r":{"docs":{},"df":0,"m":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"22":{"tf":1.0}},"df":1}}}}}}},"i":{"docs":{},"df":0,"s":{"docs":{},"df":0,"c":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"t":{"docs":{"2":{"tf":1.0}},"df":1}}}}}},"u":{"docs":{},"df":0,"m":{"docs":{},"df":0,"p":{"docs":{"5":{"tf":1.0}},"df":1}}}},"e":{"docs":{},"df":0,"m":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"g":{"docs":{"14":{"tf":1.0}},"df":1}}}},"n":{"docs":{},"df":0,"d":{"docs":{"4":{"tf":1.0}},"df":1}},"r":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{"8":{"tf":1.0}},"df":1}}}}},"f":{"docs":{},"df":0,"i":{"docs":{},"df":0,"r":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{"15":{"tf":1.0}},"df":1}}}}},"g":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"13":{"tf":1.0}},"df":1}}},"o":{"docs":{},"df":0,"m":{"docs":{},"df":0,"e":{"docs":{},"df":0,"t":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{"1":{"tf":1.0}},"df":1}}}}}}},"h":{"docs":{},"df":0,"o":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{"3":{"tf":1.0}},"df":1}}}},"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"d":{"docs":{"3":{"tf":1.0}},"df":1}}}},"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{"11":{"tf":1.0}},"df":1}}},"t":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"d":{"docs":{},"df":0,"u":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0}},"df":1}}}}}}},"v":{"docs":{},"df":0,"o":{"docs":{},"df":0,"c":{"docs":{"19":{"tf":1.0}},"df":1}}}}},"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"y":{"docs":{},"df":0,"o":{"docs":{},"df":0,"u":{"docs":{},"df":0,"t":{"docs":{"9":{"tf":1.0}},"df":1}}}}},"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"g":{"docs":{},"df":0,"t":{"docs":{},"df":0,"h":{"docs":{"10":{"tf":1.0}},"df":1}}}}},"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"e":{"docs":{"18":{"tf":1.0}},"df":1}}}},"m":{"docs":{},"df":0,"o":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{"13":{"tf":1.0}},"df":1}}}},"o":{"docs":{},"df":0,"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"5":{"tf":1.0}},"df":1}}},"u":{"docs":{},"df":0,"t":{"docs":{},"df":0,"p":{"docs":{},"df":0,"u":{"docs":{},"df":0,"t":{"docs":{"21":{"tf":1.0}},"df":1}}}}}},"q":{"docs":{},"df":0,"u":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{},"df":0,"k":{"docs":{"7":{"tf":1.0}},"df":1}}}}},"s":{"docs":{},"df":0,"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{"6":{"tf":1.0}},"df":1}}}}}},"t":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"t":{"docs":{"7":{"tf":1.0}},"df":1}}}},"w":{"docs":{},"df":0,"e":{"docs":{},"df":0,"e":{"docs":{},"df":0,"p":{"docs":{"17":{"tf":1.0}},"df":1}}}}},"t":{"docs":{},"df":0,"h":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"h":{"docs":{},"df":0,"o":{"docs":{},"df":0,"l":{"docs":{},"df":0,"d":{"docs":{"1":{"tf":1.0},"11":{"tf":1.0},"13":{"tf":1.0}},"df":3}}}}}}}},"y":{"docs":{},"df":0,"p":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{"19":{"tf":1.0}},"df":1}}}}},"v":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"d":{"docs":{"9":{"tf":1.0}},"df":1}}}}},"w":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{},"df":0,"o":{"docs":{},"df":0,"w":{"docs":{"10":{"tf":1.0}},"df":1}}}}}}}}},"documentStore":{"save":true,"docs":{"0":{"body":"twistrip is a numerical laboratory for the spectrum of the Laplacian on an\\ninfinite planar strip whose boundary conditions switch between Dirichlet and\\nNeumann across a finite window. The strip is Π = ℝ × (0, d). Two layouts\\nare studied, both parametrized by the window half-length ℓ: Twisted — Dirichlet on the bottom edge for x₁ > ℓ and on the top edge\\nfor x₁ < −ℓ, Neumann everywhere else. This layout is invariant under the\\nhalf-turn (x₁, x₂) ↦ (−x₁, d − x₂). Auxiliary — Dirichlet on the bottom edge for |x₁| > ℓ, Neumann\\nelsewhere. This layout is reflection-symmetric and its eigenvalues bracket\\nthe twisted ones, which turns it into a built-in cross-check. The essential spectrum of both operators is the half-line [E₁, ∞) with\\nE₁ = π²/(4d²). Below that threshold a finite number of discrete eigenvalues\\nlive, and their number grows as the window opens: each time ℓ passes a critical length ℓₙ a new eigenvalue detaches from the threshold and dives\\ninto the gap. Near a critical length the new eigenvalue behaves like Λₙ(ℓₙ + ε) = E₁ − (μ₁ε + μ₂ε² + O(ε³))², and the coefficients μ₁, μ₂ have closed-form expressions in terms of a generalized threshold mode — a bounded, non-decaying solution at the\\nthreshold itself. The crate provides every layer needed to compute and validate these\\nquantities: a cell-centered finite-difference discretization whose boundary closures\\nkeep the operator exactly symmetric, including an exact transparent end\\ncondition built from the discrete transverse modes; certified eigenvalue computations — every reported value comes with a\\ntwo-sided truncation bracket, and counting is done by LDLᵀ inertia, which\\ncannot miss eigenvalues; two independent detectors for the critical lengths; the perturbation pipeline for μ₁ and μ₂ with several internal\\ncross-checks (corner identity, solvability condition, an independent\\nε-sweep fit); a deterministic command-line front end with a content-addressed result\\ncache. Each of the following chapters introduces one layer, with runnable code.\\nEvery code block in this guide is also a doc-test of the crate itself, so\\nthe guide cannot silently drift out of sync with the library.","breadcrumbs":"Introduction » Introduction","id":"0","title":"Introduction"},"1":{"body":"The model module holds everything that exists before any grid: the\\nboundary partition of each layout, the transverse eigenpairs of the\\ncross-section, and the symmetries. A cross-section of the strip is the interval (0, d). Where the bottom edge\\nis Dirichlet and the top Neumann, the transverse eigenfunctions are\\nχ_m(x₂) = √(2/d)·sin(√E_m·x₂) with thresholds E_m = π²(m − ½)²/d². The first\\nof these, E₁ = π²/(4d²), is the bottom of the essential spectrum: a state\\ncan only escape to infinity along the strip if it carries at least the\\nenergy of the cheapest transverse profile that survives at infinity. WaveguideSpec captures one layout. It knows which edge carries the\\nDirichlet condition at a given x₁, its continuum threshold, and (for the\\ntwisted layout) the half-turn parity map: #![allow(unused)] fn main() {\\nuse twistrip::model::{threshold_energy, ParityMap, WaveguideSpec}; let spec = WaveguideSpec::twisted(1.0, 1.5)?;\\n// Dirichlet sits on the bottom right of the window and the top left\\nassert!(spec.bottom_dirichlet(2.0) && !spec.bottom_dirichlet(0.0));\\nassert!(spec.top_dirichlet(-2.0) && !spec.top_dirichlet(0.0));\\n// the continuum threshold is the first transverse channel\\nassert_eq!(spec.threshold(), threshold_energy(1, 1.0)?);\\n// the half-turn symmetry is an involution\\nlet p = ParityMap { d: 1.0 };\\nassert_eq!(p.apply(p.apply((0.5, 0.25))), (0.5, 0.25)); } Two structural facts from this module do a lot of work later: Parity alternation. Because the twisted operator commutes with the\\nhalf-turn, its eigenfunctions split into even and odd classes, and the\\ndiscrete eigenvalues alternate: the ground state is even, the next odd,\\nand so on. The spectral drivers verify this alternation on every computed\\neigenvector. Bracketing by the auxiliary layout. The auxiliary operator at window\\n2ℓ interlaces the twisted operator at window ℓ:\\nΛ ₂ₘ₋₁(2ℓ) ≤ Λₘ(ℓ) ≤ Λ₂ₘ(2ℓ). The auxiliary eigenvalues in turn obey\\nelementary analytic two-sided bounds, so every twisted eigenvalue is\\npinned from both sides by quantities with independent error budgets. The auxiliary layout also controls the eigenvalue count: writing N(ℓ) and\\nN*(ℓ) for the number of discrete eigenvalues of the twisted and auxiliary\\noperators, ⌊N*(2ℓ)/2⌋ ≤ N(ℓ) ≤ ⌊N*(2ℓ)/2⌋ + 1, and N*(ℓ) itself is within\\none of ⌊ℓ/d⌋. These combinatorial sandwiches are checked wholesale by the validate command.","breadcrumbs":"Geometry and thresholds » Geometry and thresholds","id":"1","title":"Geometry and thresholds"},"10":{"body":"As the window half-length ℓ grows, new eigenvalues peel off the essential\\nspectrum at a discrete set of critical lengths ℓ₁ < ℓ₂ < ⋯. Locating these\\npoints is delicate: near ℓₙ the n-th eigenvalue sits a distance O((ℓ−ℓₙ)²)\\nbelow the threshold, hugging the continuum, where truncation and\\ndiscretization errors are at their worst. The criticality module attacks\\nthe problem with two detectors of independent design, so that agreement\\nbetween them is meaningful evidence.","breadcrumbs":"Critical window lengths » Critical window lengths","id":"10","title":"Critical window lengths"},"11":{"body":"With transparent ends at offset μ = 0 the discrete operator is exactly\\ntransparent at the threshold. Its n-th eigenvalue relative to Ê₁ changes\\nsign transversally at the critical length, so ℓₙ is a zero crossing of a\\nsmooth one-dimensional function. One subtlety: the boundary tags of the\\ngrid only change when ±ℓ crosses a cell face, so the indicator is a step\\nfunction of ℓ at fixed resolution. It is therefore sampled on the\\nface-aligned ℓ-lattice — where it is smooth — and interpolated to its\\nzero.","breadcrumbs":"Critical window lengths » Detector 1: the threshold indicator","id":"11","title":"Detector 1: the threshold indicator"},"12":{"body":"For a ladder of offsets δ, bisect ℓ on the monotone predicate “at least n\\neigenvalues below Ê₁ − δ”. The count is evaluated by LDLᵀ inertia of the\\ntransparent operator at μ = √δ, where the closure is exact, so the\\npredicate carries no truncation error at all. The bisection roots ℓ(δ) are\\nthen extrapolated to δ → 0 along the emergence law ε(δ) ≈ √δ/μ₁, i.e. by a\\nleast-squares fit of ℓ(δ) = ℓₙ + c√δ. The counting predicate itself is monotone in δ — lowering the level can\\nonly lose eigenvalues: #![allow(unused)] fn main() {\\nuse twistrip::criticality::{count_below, CritGrid};\\nuse twistrip::model::Variant; let g = CritGrid::with_spacing(3.0, 1.0 / 32.0, 8);\\n// lowering the counting level can only lose eigenvalues\\nlet shallow = count_below(1.0, 1.2, 0.1, Variant::Twisted, &g)?;\\nlet deep = count_below(1.0, 1.2, 0.01, Variant::Twisted, &g)?;\\nassert!(shallow <= deep); } Both detectors are repeated over a family of grids and Richardson-\\nextrapolated. Their relative disagreement is reported and is the primary\\naccuracy diagnostic: for the first critical length at d = 1 the two\\ndetectors agree to a few parts in a thousand on production grids,\\nconverging to ℓ₁ ≈ 0.2633.","breadcrumbs":"Critical window lengths » Detector 2: count bisection","id":"12","title":"Detector 2: count bisection"},"13":{"body":"At ℓ = ℓₙ the operator has no eigenvalue at the threshold, but it does have\\na generalized threshold mode: a bounded solution that tends to a nonzero\\nmultiple of the first transverse profile at infinity instead of decaying.\\nOn the grid this is the kernel vector of the transparent operator at μ = 0,\\nnormalized so that the outgoing mode-1 amplitude is 1. This mode is the\\nseed of the whole perturbation pipeline of the next chapter, and its\\nquality is checked through the parity score and the residual of the\\ndiscrete equation.","breadcrumbs":"Critical window lengths » The generalized threshold mode","id":"13","title":"The generalized threshold mode"},"14":{"body":"Just past a critical length ℓ* = ℓₙ, the newborn eigenvalue obeys Λₙ(ℓ* + ε) = E₁ − μ(ε)², μ(ε) = μ₁ε + μ₂ε² + O(ε³), and the perturbation module computes μ₁ and μ₂ two independent ways each.","breadcrumbs":"Emergence asymptotics » Emergence asymptotics","id":"14","title":"Emergence asymptotics"},"15":{"body":"From the generalized threshold mode φ, the first coefficient is the\\nDirichlet energy μ₁ = (1/ℓ*)·∫|∂₁φ|². Independently, φ has a corner\\nsingularity at the window ends whose leading coefficient α₁ determines the\\nsame number through the corner identity μ₁ = πα₁²/4. The pipeline computes\\nboth and reports their relative agreement; a third value comes from the\\nε-sweep fit below.","breadcrumbs":"Emergence asymptotics » The first coefficient μ₁","id":"15","title":"The first coefficient μ₁"},"16":{"body":"The second coefficient needs the first-order corrector ψ₁, driven by the\\ntransport operator L₁ = −2ξ₁′∂₁² − ξ₁″∂₁, where ξ₁ is an odd C³ profile\\nthat vanishes at the origin, holds the plateau ±1 around ±ℓ*, and shuts off\\nsmoothly beyond: #![allow(unused)] fn main() {\\nuse twistrip::perturbation::{mu1_from_alpha, CutoffSpec}; let cutoff = CutoffSpec::new(0.26)?;\\n// odd profile: zero at the origin, plateau 1 around t = ell_star\\nassert_eq!(cutoff.xi(0.0), 0.0);\\nassert!((cutoff.xi(0.26) - 1.0).abs() < 1e-12);\\nassert_eq!(cutoff.xi(cutoff.support_radius() + 0.1), 0.0);\\n// the corner identity mu1 = pi * alpha1^2 / 4\\nassert!((mu1_from_alpha(2.0) - std::f64::consts::PI).abs() < 1e-12); } The corrector problem −(Δ + E₁)ψ₁ = L₁φ is solved on the grid with\\ntransparent closures in every decaying channel and an inhomogeneous flux\\n∓μ₁·(mode-1 trace of φ) in the marginal channel; the solvability condition\\nof this problem is exactly the equation that fixes μ₁, and the residual\\nmismatch of that condition is reported as a health check. Since the\\noperator has a kernel (spanned by φ), the solve is deflated and the kernel\\ncomponent fixed by a normalization at the matching cross-sections\\nx₁ = ±2ℓ*. μ₂ then assembles three ingredients: a mass term of φ over the matching\\nregion |x₁| < 2ℓ*, a cross term of φ against (L₁ψ₁ + L₂φ), and a series\\nover the closed channels weighted by their mode traces at the window edge.\\nAn algebraically equivalent reformulation is evaluated as well and the\\ndiscrepancy between the two reported.","breadcrumbs":"Emergence asymptotics » The cutoff and the corrector","id":"16","title":"The cutoff and the corrector"},"17":{"body":"Everything above trusts the perturbation formulas. The sweep does not: for\\neach ε in a geometric ladder it solves the nonlinear transparent eigenvalue\\nproblem exactly (bisection on μ, using inertia counts that are exact at\\neach trial level) and fits μ(ε) = μ₁ε + μ₂ε² + μ₃ε³ by weighted least\\nsquares — the cubic term guards the quadratic coefficient against the\\nO(ε³) remainder. The fitted μ₁ and μ₂ are compared against the formula\\nvalues; on production grids they agree to a few percent, and the remainder\\nμ(ε) − μ₁ε − μ₂ε² scales as ε³ under halving of ε, confirming the expansion\\norder by order.","breadcrumbs":"Emergence asymptotics » The ε-sweep cross-check","id":"17","title":"The ε-sweep cross-check"},"18":{"body":"The twistrip binary exposes the whole pipeline through six subcommands: Command Purpose spectrum Discrete spectrum below the threshold for one window length sweep Spectra over a range of window lengths (cached, parallel) critical Critical window length by two independent detectors threshold-mode Generalized threshold mode at a critical length emerge Emergence coefficients μ₁, μ₂ and the ε-sweep fit validate Run the invariant suite; nonzero exit on any failure","breadcrumbs":"Command line » Command line","id":"18","title":"Command line"},"19":{"body":"# spectrum of the twisted strip, d = 1, window half-length 2\\ntwistrip spectrum --d 1 --ell 2 --L 10 --nx 800 --ny 40 # sweep the window length, resumable through the cache\\ntwistrip sweep --ell-start 0.5 --ell-end 3.5 --ell-steps 13 --jobs 4 # first critical length, both detectors\\ntwistrip critical --n 1 # emergence coefficients at the first critical length\\ntwistrip emerge --n 1 --eps-fracs 0.02,0.04,0.08,0.16 # fast invariant suite (used in CI)\\ntwistrip validate --quick","breadcrumbs":"Command line » Typical invocations","id":"19","title":"Typical invocations"},"2":{"body":"The discretize module turns a layout into a symmetric sparse matrix on the\\ntruncated strip Π_L = (−L, L) × (0, d).","breadcrumbs":"Discretization » Discretization","id":"2","title":"Discretization"},"20":{"body":"Every parameter can come from a flat key-value config file, and every key\\ncan be overridden on the command line; the override wins: twistrip spectrum --config run.conf --ell 2.5 where run.conf contains lines like d = 1.0\\nell = 2.0\\nny = 16\\nlevels = 3\\n# comments are fine Unknown keys in the file, out-of-range values, and malformed flags are\\nconfiguration errors. The exit code discipline is strict: 0 on success, 1 on numerical failure (a solver that did not converge, a failed\\nvalidation), 2 on configuration errors. For example, twistrip spectrum --ell -1 exits with code 2 and the message ell must be >= 0.","breadcrumbs":"Command line » Configuration","id":"20","title":"Configuration"},"21":{"body":"Results are written as JSON and/or CSV ( --format csv|json|both, default\\nboth) to <out>.json / <out>.csv. All floating-point output carries 17\\nsignificant digits, so files round-trip exactly. --dump-matrix <path>\\nadditionally exports the assembled operator as a row col value coordinate\\nlist.","breadcrumbs":"Command line » Outputs","id":"21","title":"Outputs"},"22":{"body":"Every expensive result is stored in a content-addressed cache keyed by the\\nhash of the command, the canonical parameter set, and the code version.\\nCache writes are atomic (write to a temporary file, then rename), and every\\nrun logs its hit rate as cache hits: N/M. Sweeps cache per window length,\\nso an interrupted sweep resumes where it stopped, and a wider sweep reuses\\nthe overlap. The cache directory is .twistrip-cache by default and can be\\nmoved with --cache-dir or the TWISTRIP_CACHE_DIR environment variable; --no-cache bypasses it entirely. Runs are deterministic: the same configuration and seed produce\\nbit-identical output files, with or without the cache. --jobs N sets the\\nsize of the thread pool; parallelism does not affect the results.","breadcrumbs":"Command line » Caching and determinism","id":"22","title":"Caching and determinism"},"3":{"body":"Unknowns live at cell centers x = ((i + ½)h_x − L, (j + ½)h_y). Every\\nboundary condition is imposed through a ghost cell across a face: Dirichlet\\nreflects with a sign flip (ghost = −u), Neumann reflects evenly\\n(ghost = +u). No unknown is ever eliminated, so the assembled matrix is\\nsymmetric by construction — not up to rounding, but exactly: #![allow(unused)] fn main() {\\nuse twistrip::discretize::{assemble, build_grid, decay_ratio, EndCondition, GridSpec};\\nuse twistrip::model::WaveguideSpec; let spec = WaveguideSpec::twisted(1.0, 1.0)?;\\nlet grid = build_grid(spec, GridSpec::new(3.0, 48, 8))?;\\nlet bundle = assemble(&grid, EndCondition::Dirichlet)?;\\n// ghost-cell closures keep the operator exactly symmetric\\nassert_eq!(bundle.a.asymmetry(), 0.0);\\n// a mode at its own threshold does not decay at all\\nassert_eq!(decay_ratio(0.0), 1.0); } The cell-centered choice has a second, less obvious payoff: the sampled\\ntransverse profiles sin(√E_m x₂) are exact eigenvectors of the discrete\\ntransverse chain with mixed Dirichlet/Neumann faces. Their discrete\\nenergies Ê_m = (2 − 2cos(√E_m h_y))/h_y² converge to E_m at second order,\\nand — crucially — the discrete machinery can work with Ê_m exactly, so no\\ntransverse discretization error leaks into constructions that live at the\\nthreshold.","breadcrumbs":"Discretization » Cell-centered grids and ghost closures","id":"3","title":"Cell-centered grids and ghost closures"},"4":{"body":"Truncating the strip at ±L needs a condition on the artificial ends. Three\\nclosures are available: Dirichlet — shifts every eigenvalue up: an upper bound. Neumann — shifts every eigenvalue down: a lower bound. Transparent at offset μ — expands the end trace in discrete\\ntransverse modes and closes each decaying channel m with its exact\\none-step decay ratio ρ_m at energy Ê₁ − μ². A discrete eigenfunction of\\nthe infinite strip at exactly that energy satisfies this closure with\\nzero truncation error, which is what makes threshold-level constructions\\n(eigenvalue counting at a prescribed level, the generalized threshold\\nmode, the corrector problem) possible on a finite grid. The transparent closure couples all cells of the two end columns, so the\\nmatrix gains two small dense blocks; everything else remains a five-point\\nstencil. Grid indexing is column-major in x₁ ( idx = i * ny + j), which\\nbounds the half bandwidth by ny and lets the band LDLᵀ factorization used\\nfor counting and shift-inversion scale linearly in the strip length.","breadcrumbs":"Discretization » End conditions","id":"4","title":"End conditions"},"5":{"body":"Any assembled operator can be exported as a row col value coordinate list\\nwith the CLI flag --dump-matrix <path>, for inspection in external tools.","breadcrumbs":"Discretization » Dumping the operator","id":"5","title":"Dumping the operator"},"6":{"body":"The spectrum module answers the first physical question: which eigenvalues\\nsit below the threshold, and how reliable are they?","breadcrumbs":"Bracketed spectra » Bracketed spectra","id":"6","title":"Bracketed spectra"},"7":{"body":"#![allow(unused)] fn main() {\\nuse twistrip::model::WaveguideSpec;\\nuse twistrip::spectrum::{discrete_spectrum, Numerics}; let spec = WaveguideSpec::twisted(1.0, 2.0)?;\\nlet num = Numerics { ny: 8, ..Numerics::default() };\\nlet report = discrete_spectrum(&spec, &num)?;\\nassert!(report.count >= 1);\\nfor ev in &report.eigenvalues { println!(\\"m={} [{:.6}, {:.6}] {}\\", ev.m, ev.lower, ev.upper, ev.parity);\\n} } Numerics collects the discretization choices: the truncation half-length\\n(default ℓ + 3d, far enough that end effects decay below the grid error),\\nthe coarsest transverse resolution ny, and the number of refinement\\nlevels, each of which doubles both nx and ny.","breadcrumbs":"Bracketed spectra » Quick start","id":"7","title":"Quick start"},"8":{"body":"Every eigenvalue is computed twice on the same grid: once with Neumann\\nartificial ends and once with Dirichlet ends. The Neumann-truncated\\noperator is form-smaller than the infinite-strip operator and the\\nDirichlet-truncated one is form-larger, so the pair [lower, upper] is a\\ngenuine two-sided truncation bracket, not an estimate. The midpoints over\\nthe refinement family are Richardson-extrapolated into the extrapolated\\nfield, and the certified count uses LDLᵀ inertia on the finest grid —\\ninertia counts sign changes of a factorization, so it cannot silently skip\\nan eigenvalue the way an iterative solver can. Each eigenvector is classified under the half-turn parity; the report\\nrecords the classification together with a residual score, and the expected\\neven/odd alternation is enforced by the validation suite.","breadcrumbs":"Bracketed spectra » Where the error bars come from","id":"8","title":"Where the error bars come from"},"9":{"body":"validate_bracketing runs the full interlacing check at one window length:\\nthe twisted spectrum at ℓ against the auxiliary spectrum at 2ℓ, the\\nanalytic two-sided bounds on the auxiliary eigenvalues, and the counting\\nsandwich: #![allow(unused)] fn main() {\\nuse twistrip::spectrum::{validate_bracketing, Numerics}; let num = Numerics { ny: 8, ..Numerics::default() };\\nlet report = validate_bracketing(1.0, 1.0, &num)?;\\n// every twisted eigenvalue sits between its auxiliary neighbours\\nassert!(report.checks.iter().all(|c| c.ok));\\nassert!(report.aux_analytic_ok && report.count_sandwich_ok); } The same machinery powers the validate CLI subcommand, which repeats\\nthese checks over a set of window lengths and reports one pass/fail line\\nper invariant.","breadcrumbs":"Bracketed spectra » Cross-validation against the auxiliary layout","id":"9","title":"Cross-validation against the auxiliary layout"}},"docInfo":{"0":{"body":211,"breadcrumbs":2,"title":1},"1":{"body":207,"breadcrumbs":4,"title":2},"10":{"body":43,"breadcrumbs":6,"title":3},"11":{"body":46,"breadcrumbs":7,"title":4},"12":{"body":100,"breadcrumbs":7,"title":4},"13":{"body":44,"breadcrumbs":6,"title":3},"14":{"body":15,"breadcrumbs":4,"title":2},"15":{"body":35,"breadcrumbs":4,"title":2},"16":{"body":135,"breadcrumbs":4,"title":2},"17":{"body":52,"breadcrumbs":5,"title":3},"18":{"body":52,"breadcrumbs":4,"title":2},"19":{"body":69,"breadcrumbs":4,"title":2},"2":{"body":14,"breadcrumbs":2,"title":1},"20":{"body":69,"breadcrumbs":3,"title":1},"21":{"body":34,"breadcrumbs":3,"title":1},"22":{"body":76,"breadcrumbs":4,"title":2},"3":{"body":115,"breadcrumbs":6,"title":5},"4":{"body":111,"breadcrumbs":3,"title":2},"5":{"body":16,"breadcrumbs":3,"title":2},"6":{"body":11,"breadcrumbs":4,"title":2},"7":{"body":59,"breadcrumbs":4,"title":2},"8":{"body":79,"breadcrumbs":5,"title":3},"9":{"body":65,"breadcrumbs":7,"title":5}},"length":23},"lang":"English"}}'));